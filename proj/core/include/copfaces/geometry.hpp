#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "copfaces/config.hpp"
#include "copfaces/simplex_vector.hpp"

namespace copfaces {

enum class SigmaRule {
  AllMembers,    ///< minimum positive coordinate over every member
  HullVertices,  ///< same minimum, restricted to the vertices of conv V
};

/// Nonempty finite family V = {t(i)} of simplex points with a cached sigma.
class VectorFamily {
 public:
  explicit VectorFamily(std::vector<SimplexVector> members, SigmaRule rule = SigmaRule::AllMembers);

  [[nodiscard]] int order() const { return members_.front().order(); }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] const std::vector<SimplexVector>& members() const { return members_; }
  [[nodiscard]] const SimplexVector& operator[](std::size_t i) const { return members_[i]; }
  [[nodiscard]] const Scalar& sigma() const { return sigma_; }
  [[nodiscard]] SigmaRule rule() const { return rule_; }
  /// Union of the member supports.
  [[nodiscard]] IndexSet support_union() const;

 private:
  std::vector<SimplexVector> members_;
  SigmaRule rule_;
  Scalar sigma_;
};

Scalar sigma(const VectorFamily& v);

/// Indices of members that are vertices of conv V (duplicates keep the first).
std::vector<std::size_t> hull_vertex_indices(const std::vector<SimplexVector>& points);

/// Convex weights alpha >= 0, sum 1, with t = sum alpha_i points[i]; nullopt
/// if t is outside the hull.
std::optional<Vector> convex_weights(const SimplexVector& t, const std::vector<SimplexVector>& points);

/// Like convex_weights, but the support of alpha is the first feasible subset
/// in support order (smallest cardinality, then lexicographic).
std::optional<Vector> convex_weights_min_support(const SimplexVector& t, const std::vector<SimplexVector>& points);

/// rho(t, conv V) in the l1 norm.
Scalar l1_distance_to_hull(const SimplexVector& t, const VectorFamily& v);

bool in_omega(const SimplexVector& t, const VectorFamily& v);
bool in_n(const SimplexVector& t, const VectorFamily& v);

/// Smallest i0 with P_0(t) contained in P_0(t(i0)). Throws InvariantError if
/// none exists and t is outside N(V); InternalError if none exists inside.
std::size_t support_cover_witness(const SimplexVector& t, const VectorFamily& v);

/// Number of points of T with coordinates in (1/denominator) Z.
std::size_t simplex_grid_size(int p, int denominator);

/// All grid points, lexicographically ascending in (k_1, ..., k_p).
std::vector<SimplexVector> simplex_grid(int p, int denominator, const Limits& limits = {});

/// Grid points that lie in Omega(V).
std::vector<SimplexVector> omega_grid(const VectorFamily& v, int denominator, const Limits& limits = {});

}  // namespace copfaces
