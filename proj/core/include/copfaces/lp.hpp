#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "copfaces/scalar.hpp"

namespace copfaces {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class VariableBound { NonNegative, Free };
enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

/// optimize objective^T x  s.t.  rows[i]^T x (relation[i]) rhs[i],  x_j per bounds[j].
struct LinearProgram {
  Sense sense = Sense::Minimize;
  Vector objective;
  std::vector<Vector> rows;
  std::vector<Relation> relations;
  Vector rhs;
  /// Empty means every variable is nonnegative.
  std::vector<VariableBound> bounds;

  LinearProgram() = default;
  explicit LinearProgram(std::size_t num_variables, Sense s = Sense::Minimize)
      : sense(s), objective(num_variables, Scalar(0)) {}

  [[nodiscard]] std::size_t num_variables() const { return objective.size(); }
  void add_constraint(Vector row, Relation relation, Scalar value);
  void set_free(std::size_t variable);
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Scalar value = 0;     ///< optimal objective value (Optimal only)
  Vector solution;      ///< optimal basic solution in the original variables
  Vector ray;           ///< improving direction (Unbounded only)
  std::size_t pivots = 0;
};

/// Exact two-phase primal simplex on a dense rational tableau, Bland's rule
/// for both entering and leaving choices (no cycling).
LpResult solve_lp(const LinearProgram& lp);

/// A solution of rows * x = rhs with every coordinate strictly positive,
/// chosen to maximize the smallest coordinate (capped at 1). nullopt if the
/// system has no positive solution.
std::optional<Vector> strictly_positive_solution(const std::vector<Vector>& rows, const Vector& rhs);

}  // namespace copfaces
