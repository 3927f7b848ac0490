#include "copfaces/lp.hpp"

#include <optional>

#include "copfaces/errors.hpp"
#include "copfaces/linalg.hpp"

namespace copfaces {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

void LinearProgram::add_constraint(Vector row, Relation relation, Scalar value) {
  if (row.size() != objective.size()) throw DimensionError("constraint length does not match variable count");
  rows.push_back(std::move(row));
  relations.push_back(relation);
  rhs.push_back(std::move(value));
}

void LinearProgram::set_free(std::size_t variable) {
  if (bounds.empty()) bounds.assign(objective.size(), VariableBound::NonNegative);
  bounds.at(variable) = VariableBound::Free;
}

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, Vector(cols + 1, Scalar(0))) {}

  [[nodiscard]] std::size_t rows() const { return data_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r][c]; }
  [[nodiscard]] const Scalar& at(std::size_t r, std::size_t c) const { return data_[r][c]; }
  Scalar& rhs(std::size_t r) { return data_[r][cols_]; }
  [[nodiscard]] const Scalar& rhs(std::size_t r) const { return data_[r][cols_]; }
  Vector& row(std::size_t r) { return data_[r]; }
  void erase_row(std::size_t r) { data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(r)); }

  /// Pivots on (pr, pc), also eliminating column pc from `cost`.
  void pivot(std::size_t pr, std::size_t pc, Vector& cost) {
    Vector& prow = data_[pr];
    const Scalar inv = 1 / prow[pc];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k <= cols_; ++k) {
      if (prow[k] != 0) {
        prow[k] *= inv;
        nz.push_back(k);
      }
    }
    auto eliminate = [&](Vector& target) {
      if (target[pc] == 0) return;
      const Scalar f = target[pc];
      for (auto k : nz) target[k] -= f * prow[k];
    };
    for (std::size_t r = 0; r < data_.size(); ++r) {
      if (r != pr) eliminate(data_[r]);
    }
    eliminate(cost);
  }

 private:
  std::size_t cols_;
  std::vector<Vector> data_;
};

enum class StepOutcome { Optimal, Unbounded };

struct SimplexRun {
  StepOutcome outcome;
  std::size_t entering = 0;  // valid when Unbounded
};

// Minimizes the objective encoded in `cost` (reduced costs, last entry holds
// minus the current value) over columns with allowed[c] == true.
SimplexRun run_simplex(Tableau& t, std::vector<std::size_t>& basis, Vector& cost, const std::vector<bool>& allowed,
                       std::size_t& pivots) {
  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (allowed[c] && cost[c] < 0) {
        entering = c;
        break;
      }
    }
    if (!entering) return {StepOutcome::Optimal};

    std::optional<std::size_t> leave;
    Scalar best_ratio;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const auto& a = t.at(r, *entering);
      if (a <= 0) continue;
      Scalar ratio = t.rhs(r) / a;
      if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[*leave])) {
        leave = r;
        best_ratio = std::move(ratio);
      }
    }
    if (!leave) return {StepOutcome::Unbounded, *entering};
    t.pivot(*leave, *entering, cost);
    basis[*leave] = *entering;
    ++pivots;
  }
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  const std::size_t m = lp.rows.size();
  if (lp.relations.size() != m || lp.rhs.size() != m) throw DimensionError("LP: inconsistent constraint arrays");
  if (!lp.bounds.empty() && lp.bounds.size() != n) throw DimensionError("LP: bounds length mismatch");
  for (const auto& r : lp.rows) {
    if (r.size() != n) throw DimensionError("LP: constraint row length mismatch");
  }

  // Structural columns: x_j = x_j^+ - x_j^- for free variables.
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = ncols++;
    if (!lp.bounds.empty() && lp.bounds[j] == VariableBound::Free) neg_col[j] = ncols++;
  }

  // Row normalization to b >= 0, then slack / surplus / artificial columns.
  std::vector<Relation> rel(lp.relations);
  std::vector<int> flip(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.rhs[i] < 0) {
      flip[i] = -1;
      if (rel[i] == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
      else if (rel[i] == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
    }
  }
  std::vector<std::size_t> slack_col(m, SIZE_MAX), art_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) {
    if (rel[i] != Relation::Equal) slack_col[i] = ncols++;
  }
  const std::size_t first_artificial = ncols;
  for (std::size_t i = 0; i < m; ++i) {
    if (rel[i] != Relation::LessEqual) art_col[i] = ncols++;
  }

  Tableau t(m, ncols);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Scalar sgn(flip[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = lp.rows[i][j];
      if (a == 0) continue;
      t.at(i, pos_col[j]) = sgn * a;
      if (neg_col[j] != SIZE_MAX) t.at(i, neg_col[j]) = -sgn * a;
    }
    t.rhs(i) = sgn * lp.rhs[i];
    if (rel[i] == Relation::LessEqual) {
      t.at(i, slack_col[i]) = 1;
      basis[i] = slack_col[i];
    } else {
      if (rel[i] == Relation::GreaterEqual) t.at(i, slack_col[i]) = -1;
      t.at(i, art_col[i]) = 1;
      basis[i] = art_col[i];
    }
  }

  LpResult result;

  // Phase 1: minimize the sum of artificials.
  if (first_artificial < ncols) {
    Vector cost(ncols + 1, Scalar(0));
    for (std::size_t c = first_artificial; c < ncols; ++c) cost[c] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < first_artificial) continue;
      for (std::size_t c = 0; c <= ncols; ++c) {
        if (t.at(i, c) != 0) cost[c] -= t.at(i, c);
      }
    }
    std::vector<bool> allowed(ncols, true);
    run_simplex(t, basis, cost, allowed, result.pivots);
    if (-cost[ncols] > 0) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows();) {
      if (basis[i] < first_artificial) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (t.at(i, c) != 0) {
          col = c;
          break;
        }
      }
      if (col) {
        t.pivot(i, *col, cost);
        basis[i] = *col;
        ++result.pivots;
        ++i;
      } else {
        t.erase_row(i);
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  // Phase 2.
  Vector cost(ncols + 1, Scalar(0));
  const Scalar dir = lp.sense == Sense::Minimize ? Scalar(1) : Scalar(-1);
  for (std::size_t j = 0; j < n; ++j) {
    cost[pos_col[j]] = dir * lp.objective[j];
    if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = -dir * lp.objective[j];
  }
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const Scalar cb = cost[basis[i]];
    if (cb == 0) continue;
    for (std::size_t c = 0; c <= ncols; ++c) {
      if (t.at(i, c) != 0) cost[c] -= cb * t.at(i, c);
    }
  }
  std::vector<bool> allowed(ncols, true);
  for (std::size_t c = first_artificial; c < ncols; ++c) allowed[c] = false;
  const auto run = run_simplex(t, basis, cost, allowed, result.pivots);

  Vector expanded(ncols, Scalar(0));
  for (std::size_t i = 0; i < t.rows(); ++i) expanded[basis[i]] = t.rhs(i);
  auto to_original = [&](const Vector& e) {
    Vector x(n, Scalar(0));
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = e[pos_col[j]];
      if (neg_col[j] != SIZE_MAX) x[j] -= e[neg_col[j]];
    }
    return x;
  };
  result.solution = to_original(expanded);

  if (run.outcome == StepOutcome::Unbounded) {
    Vector direction(ncols, Scalar(0));
    direction[run.entering] = 1;
    for (std::size_t i = 0; i < t.rows(); ++i) direction[basis[i]] = -t.at(i, run.entering);
    result.status = LpStatus::Unbounded;
    result.ray = to_original(direction);
    return result;
  }
  result.status = LpStatus::Optimal;
  result.value = dot(lp.objective, result.solution);
  return result;
}

std::optional<Vector> strictly_positive_solution(const std::vector<Vector>& rows, const Vector& rhs) {
  if (rows.size() != rhs.size()) throw DimensionError("strictly_positive_solution: rhs length mismatch");
  if (rows.empty()) throw DimensionError("strictly_positive_solution: empty system");
  const std::size_t n = rows.front().size();
  RationalMatrix aug(rows.size(), n + 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) throw DimensionError("strictly_positive_solution: ragged rows");
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = rows[r][c];
    aug(r, n) = rhs[r];
  }
  const auto ech = reduced_row_echelon(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == n) return std::nullopt;
  if (ech.pivots.size() == n) {
    Vector x(n);
    for (std::size_t r = 0; r < n; ++r) {
      x[ech.pivots[r]] = ech.reduced(r, n);
      if (x[ech.pivots[r]] <= 0) return std::nullopt;
    }
    return x;
  }

  // maximize s  s.t.  reduced system, x_k - s >= 0, s <= 1.
  LinearProgram lp(n + 1, Sense::Maximize);
  lp.objective[n] = 1;
  lp.set_free(n);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    Vector row(n + 1, Scalar(0));
    for (std::size_t c = 0; c < n; ++c) row[c] = ech.reduced(r, c);
    lp.add_constraint(std::move(row), Relation::Equal, ech.reduced(r, n));
  }
  for (std::size_t k = 0; k < n; ++k) {
    Vector row(n + 1, Scalar(0));
    row[k] = 1;
    row[n] = -1;
    lp.add_constraint(std::move(row), Relation::GreaterEqual, 0);
  }
  Vector cap(n + 1, Scalar(0));
  cap[n] = 1;
  lp.add_constraint(std::move(cap), Relation::LessEqual, 1);
  const auto res = solve_lp(lp);
  if (res.status != LpStatus::Optimal || res.value <= 0) return std::nullopt;
  return Vector(res.solution.begin(), res.solution.begin() + static_cast<std::ptrdiff_t>(n));
}

}  // namespace copfaces
