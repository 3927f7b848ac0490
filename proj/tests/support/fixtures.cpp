#include "fixtures.hpp"

#include "frozen_values.hpp"

namespace copfaces::testing {

SymMatrix horn() {
  return SymMatrix::from_rows({{1, -1, 1, 1, -1}, {-1, 1, -1, 1, 1}, {1, -1, 1, -1, 1}, {1, 1, -1, 1, -1}, {-1, 1, 1, -1, 1}});
}

SymMatrix ray2() { return SymMatrix::from_rows({{1, -1}, {-1, 1}}); }

SymMatrix worked_dstar() { return SymMatrix::from_rows({{0, 1}, {1, 0}}); }

SimplexVector sv(std::initializer_list<const char*> coords) {
  Vector v;
  for (const char* c : coords) v.push_back(parse_scalar(c));
  return SimplexVector(std::move(v));
}

SimplexVector random_simplex_point(Rng& rng, int p, int max_support) {
  std::uniform_int_distribution<int> size_dist(1, std::max(1, std::min(p, max_support)));
  std::uniform_int_distribution<int> weight(1, 4);
  std::vector<int> idx(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) idx[static_cast<std::size_t>(k)] = k;
  std::shuffle(idx.begin(), idx.end(), rng);
  const int s = size_dist(rng);
  Vector v(static_cast<std::size_t>(p), Scalar(0));
  for (int a = 0; a < s; ++a) v[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])] = weight(rng);
  return SimplexVector::normalized(std::move(v));
}

SymMatrix random_copositive(Rng& rng, int p, const SimplexVector* planted) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> rank(0, 2);
  std::uniform_int_distribution<int> nonneg(0, 3);
  SymMatrix d(p);
  const int r = rank(rng);
  for (int a = 0; a < r; ++a) {
    Vector b(static_cast<std::size_t>(p));
    for (auto& x : b) x = entry(rng);
    if (planted) {
      // b - (b.tau / tau.tau) tau, scaled to clear the division.
      const Vector& tau = planted->coords();
      const Scalar bt = dot(b, tau);
      const Scalar tt = dot(tau, tau);
      for (std::size_t k = 0; k < b.size(); ++k) b[k] = tt * b[k] - bt * tau[k];
    }
    d += SymMatrix::outer(b);
  }
  for (int i = 0; i < p; ++i) {
    for (int j = i; j < p; ++j) {
      if (planted && planted->support().contains(i) && planted->support().contains(j)) continue;
      const int v = nonneg(rng);
      // Sparse nonnegative part: about half of the entries stay zero.
      if (v >= 2) d.add(i, j, v - 1);
    }
  }
  return d;
}

std::vector<SymMatrix> random_matrix_set(Rng& rng, int max_p) {
  std::uniform_int_distribution<int> order(2, max_p);
  std::uniform_int_distribution<int> gens(1, 4);
  std::uniform_int_distribution<int> mode(0, 2);
  const int p = order(rng);
  const int g = gens(rng);
  const int m = mode(rng);
  std::vector<SymMatrix> out;
  const SimplexVector shared = random_simplex_point(rng, p, 3);
  for (int i = 0; i < g; ++i) {
    if (m == 0) {
      out.push_back(random_copositive(rng, p, &shared));
    } else if (m == 1) {
      const SimplexVector own = random_simplex_point(rng, p, 3);
      out.push_back(random_copositive(rng, p, &own));
    } else {
      out.push_back(random_copositive(rng, p, nullptr));
    }
  }
  return out;
}

SymMatrix random_symmetric(Rng& rng, int p, int range, int den) {
  std::uniform_int_distribution<int> entry(-range, range);
  SymMatrix d(p);
  for (int i = 0; i < p; ++i) {
    for (int j = i; j < p; ++j) d.set(i, j, Scalar(entry(rng), den));
  }
  return d;
}

std::vector<std::vector<SymMatrix>> matrix_set_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<std::vector<SymMatrix>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_matrix_set(rng, 4));
  return out;
}

std::vector<NamedFace> face_corpus() {
  const auto I = [](std::initializer_list<int> one_based, int p) {
    return IndexSet::from_one_based(std::vector<int>(one_based), p);
  };
  std::vector<NamedFace> out;
  out.push_back({"ray", FaceSpec(2, {sv({"1/2", "1/2"})}, {I({1, 2}, 2)})});
  out.push_back({"corner-p2", FaceSpec(2, {sv({"1", "0"})}, {I({1}, 2)})});
  out.push_back({"nested", FaceSpec::exposed(3, {sv({"1/2", "1/2", "0"}), sv({"1/4", "1/4", "1/2"})})});
  out.push_back({"vertex-exposed", FaceSpec(3, {sv({"1", "0", "0"})}, {I({1}, 3)})});
  out.push_back({"vertex-full", FaceSpec(3, {sv({"1", "0", "0"})}, {I({1, 2, 3}, 3)})});
  out.push_back({"two-vertices", FaceSpec(3, {sv({"1", "0", "0"}), sv({"0", "1", "0"})}, {I({1}, 3), I({2}, 3)})});
  out.push_back({"edge-mid-full", FaceSpec(3, {sv({"1/2", "0", "1/2"})}, {I({1, 2, 3}, 3)})});
  out.push_back({"disjoint-pairs", FaceSpec::exposed(4, {sv({"1/2", "1/2", "0", "0"}), sv({"0", "0", "1/2", "1/2"})})});
  out.push_back({"triangle-center", FaceSpec(4, {sv({"1/3", "1/3", "1/3", "0"})}, {I({1, 2, 3, 4}, 4)})});
  out.push_back({"shared-vertex",
                 FaceSpec(4, {sv({"1/2", "1/2", "0", "0"}), sv({"1/2", "0", "1/2", "0"})}, {I({1, 2}, 4), I({1, 3}, 4)})});
  return out;
}

std::vector<NamedLinCop> lincop_fixtures() {
  using M = SymMatrix;
  std::vector<NamedLinCop> out;
  out.push_back({"slater",
                 LinearCopProblem({1}, {M::from_rows({{0, -1}, {-1, 1}}), M::from_rows({{1, 0}, {0, 0}})}),
                 parse_scalar(frozen::kLinCopSlaterOptimum)});
  out.push_back({"moving-zero",
                 LinearCopProblem({1}, {M::from_rows({{1, -1}, {-1, 1}}), M::from_rows({{0, 0}, {0, 1}})}),
                 parse_scalar(frozen::kLinCopMovingZeroOptimum)});
  out.push_back({"pinned",
                 LinearCopProblem({1}, {M::from_rows({{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}}),
                                        M::from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, -1}})}),
                 parse_scalar(frozen::kLinCopPinnedOptimum)});
  out.push_back({"corner",
                 LinearCopProblem({1, 1}, {M::from_rows({{0, -1, 0}, {-1, 1, 0}, {0, 0, 0}}),
                                           M::from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
                                           M::from_rows({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}})}),
                 parse_scalar(frozen::kLinCopCornerOptimum)});
  out.push_back({"hollow",
                 LinearCopProblem({1, 2, 3}, {M::zero(3), M::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}),
                                              M::from_rows({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}),
                                              M::from_rows({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}})}),
                 parse_scalar(frozen::kLinCopHollowOptimum)});
  return out;
}

}  // namespace copfaces::testing
