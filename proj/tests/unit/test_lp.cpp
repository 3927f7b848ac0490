#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace copfaces {
namespace {

TEST(Lp, SingleLowerBound) {
  LinearProgram lp(1);
  lp.objective = {Scalar(1)};
  lp.add_constraint({Scalar(1)}, Relation::GreaterEqual, 3);
  const auto res = solve_lp(lp);
  ASSERT_EQ(res.status, LpStatus::Optimal);
  EXPECT_EQ(res.value, Scalar(3));
  EXPECT_EQ(res.solution[0], Scalar(3));
}

TEST(Lp, Infeasible) {
  LinearProgram lp(1);
  lp.add_constraint({Scalar(1)}, Relation::LessEqual, -1);
  EXPECT_EQ(solve_lp(lp).status, LpStatus::Infeasible);
}

TEST(Lp, UnboundedReportsImprovingRay) {
  LinearProgram lp(2, Sense::Maximize);
  lp.objective = {Scalar(1), Scalar(0)};
  lp.add_constraint({Scalar(1), Scalar(-1)}, Relation::LessEqual, 1);
  const auto res = solve_lp(lp);
  ASSERT_EQ(res.status, LpStatus::Unbounded);
  EXPECT_GT(dot(lp.objective, res.ray), 0);
}

TEST(Lp, FreeVariables) {
  LinearProgram lp(1);
  lp.objective = {Scalar(1)};
  lp.set_free(0);
  lp.add_constraint({Scalar(2)}, Relation::GreaterEqual, -5);
  const auto res = solve_lp(lp);
  ASSERT_EQ(res.status, LpStatus::Optimal);
  EXPECT_EQ(res.value, Scalar(-5, 2));
}

TEST(Lp, L1DistanceExample) {
  // t = (1/2, 1/4, 1/4), V = {e1, e2}: variables alpha(2), u(3), v(3).
  LinearProgram lp(8);
  for (std::size_t c = 2; c < 8; ++c) lp.objective[c] = 1;
  const Vector t{Scalar(1, 2), Scalar(1, 4), Scalar(1, 4)};
  for (int k = 0; k < 3; ++k) {
    Vector row(8, Scalar(0));
    if (k < 2) row[static_cast<std::size_t>(k)] = 1;
    row[static_cast<std::size_t>(2 + k)] = 1;
    row[static_cast<std::size_t>(5 + k)] = -1;
    lp.add_constraint(row, Relation::Equal, t[static_cast<std::size_t>(k)]);
  }
  lp.add_constraint({Scalar(1), Scalar(1), 0, 0, 0, 0, 0, 0}, Relation::Equal, 1);
  const auto res = solve_lp(lp);
  ASSERT_EQ(res.status, LpStatus::Optimal);
  EXPECT_EQ(res.value, Scalar(1, 2));
}

// Random bounded LPs against vertex enumeration and the dual LP.
TEST(Lp, MatchesVertexEnumerationAndDual) {
  Rng rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> pos(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
    const std::size_t m = 2 + static_cast<std::size_t>(trial % 3);
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t i = 0; i < m; ++i) {
      Vector row(n);
      for (auto& x : row) x = coef(rng);
      rows.push_back(row);
      rhs.push_back(pos(rng));
    }
    // Box keeps the region bounded.
    for (std::size_t j = 0; j < n; ++j) {
      Vector row(n, Scalar(0));
      row[j] = 1;
      rows.push_back(row);
      rhs.push_back(5);
    }
    Vector c(n);
    for (auto& x : c) x = coef(rng);

    LinearProgram primal(n);
    primal.objective = c;
    for (std::size_t i = 0; i < rows.size(); ++i) primal.add_constraint(rows[i], Relation::LessEqual, rhs[i]);
    const auto res = solve_lp(primal);
    const auto brute = oracle::lp_by_vertices(c, rows, rhs);
    ASSERT_TRUE(brute.has_value());  // x = 0 is feasible
    ASSERT_EQ(res.status, LpStatus::Optimal);
    EXPECT_EQ(res.value, *brute) << "trial " << trial;

    // Dual: max -rhs^T y  s.t.  -A^T y <= c, y >= 0 (as min rhs^T y, A^T y >= -c).
    LinearProgram dual(rows.size());
    dual.objective = rhs;
    for (std::size_t j = 0; j < n; ++j) {
      Vector col(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) col[i] = rows[i][j];
      dual.add_constraint(col, Relation::GreaterEqual, -c[j]);
    }
    const auto dres = solve_lp(dual);
    ASSERT_EQ(dres.status, LpStatus::Optimal);
    EXPECT_EQ(-dres.value, res.value) << "trial " << trial;
  }
}

TEST(Lp, StrictlyPositiveSolution) {
  // x1 + x2 = 1, x1 - x2 = 0 -> (1/2, 1/2).
  const auto x = strictly_positive_solution({{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}}, {Scalar(1), Scalar(0)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Scalar(1, 2));
  EXPECT_FALSE(strictly_positive_solution({{Scalar(1), Scalar(1)}}, {Scalar(0)}).has_value());
  const auto y = strictly_positive_solution({{Scalar(1), Scalar(1), Scalar(1)}}, {Scalar(1)});
  ASSERT_TRUE(y.has_value());
  for (const auto& v : *y) EXPECT_GT(v, 0);
}

}  // namespace
}  // namespace copfaces
