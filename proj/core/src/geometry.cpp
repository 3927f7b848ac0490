#include "copfaces/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "copfaces/errors.hpp"
#include "copfaces/lp.hpp"

namespace copfaces {

namespace {

Scalar min_positive_coordinate(const std::vector<SimplexVector>& points, const std::vector<std::size_t>& which) {
  Scalar best = 1;
  for (auto i : which) {
    for (int k : points[i].support().indices()) best = std::min(best, points[i][k]);
  }
  return best;
}

Scalar l1(const SimplexVector& a, const SimplexVector& b) {
  Scalar s = 0;
  for (int k = 0; k < a.order(); ++k) s += abs(a[k] - b[k]);
  return s;
}

void require_same_order(const SimplexVector& t, int p) {
  if (t.order() != p) throw DimensionError("simplex vector of order " + std::to_string(t.order()) + ", expected " +
                                           std::to_string(p));
}

// Sign of rho(t, conv V) - sigma(V), using cheap bounds before the LP.
int compare_to_sigma(const SimplexVector& t, const VectorFamily& v) {
  require_same_order(t, v.order());
  const IndexSet u = v.support_union();
  Scalar outside = 0;
  for (int k : u.complement(t.order()).indices()) outside += t[k];
  // Every hull point vanishes off u, so rho >= 2 * (mass of t off u).
  if (2 * outside > v.sigma()) return 1;
  Scalar nearest = l1(t, v[0]);
  for (std::size_t i = 1; i < v.size(); ++i) nearest = std::min(nearest, l1(t, v[i]));
  if (nearest < v.sigma()) return -1;
  const Scalar rho = l1_distance_to_hull(t, v);
  return rho < v.sigma() ? -1 : (rho == v.sigma() ? 0 : 1);
}

}  // namespace

VectorFamily::VectorFamily(std::vector<SimplexVector> members, SigmaRule rule)
    : members_(std::move(members)), rule_(rule) {
  if (members_.empty()) throw InvariantError("vector family must be nonempty");
  const int p = members_.front().order();
  for (const auto& t : members_) require_same_order(t, p);
  std::vector<std::size_t> which;
  if (rule == SigmaRule::HullVertices) {
    which = hull_vertex_indices(members_);
  } else {
    for (std::size_t i = 0; i < members_.size(); ++i) which.push_back(i);
  }
  sigma_ = min_positive_coordinate(members_, which);
}

IndexSet VectorFamily::support_union() const {
  IndexSet u;
  for (const auto& t : members_) u = u | t.support();
  return u;
}

Scalar sigma(const VectorFamily& v) { return v.sigma(); }

std::optional<Vector> convex_weights(const SimplexVector& t, const std::vector<SimplexVector>& points) {
  const std::size_t m = points.size();
  if (m == 0) return std::nullopt;
  const int p = t.order();
  for (std::size_t i = 0; i < m; ++i) {
    require_same_order(points[i], p);
    if (points[i] == t) {
      Vector alpha(m, Scalar(0));
      alpha[i] = 1;
      return alpha;
    }
  }
  LinearProgram lp(m);
  for (int k = 0; k < p; ++k) {
    Vector row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = points[i][k];
    lp.add_constraint(std::move(row), Relation::Equal, t[k]);
  }
  lp.add_constraint(Vector(m, Scalar(1)), Relation::Equal, 1);
  auto res = solve_lp(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return res.solution;
}

std::optional<Vector> convex_weights_min_support(const SimplexVector& t, const std::vector<SimplexVector>& points) {
  const std::size_t m = points.size();
  if (m == 0) return std::nullopt;
  if (m > 30) throw LimitError("convex_weights_min_support: too many points");
  if (!convex_weights(t, points)) return std::nullopt;
  // Caratheodory: some feasible subset has at most p points.
  const int max_size = std::min<int>(static_cast<int>(m), t.order());
  for (const auto& subset : supports_by_cardinality(static_cast<int>(m))) {
    if (subset.size() > max_size) break;
    // Support of a minimal point set must lie inside P_+(t).
    std::vector<SimplexVector> chosen;
    bool fits = true;
    for (int i : subset.indices()) {
      if (!points[static_cast<std::size_t>(i)].support().is_subset_of(t.support())) fits = false;
      chosen.push_back(points[static_cast<std::size_t>(i)]);
    }
    if (!fits) continue;
    if (auto w = convex_weights(t, chosen)) {
      Vector alpha(m, Scalar(0));
      const auto idx = subset.indices();
      for (std::size_t a = 0; a < idx.size(); ++a) alpha[static_cast<std::size_t>(idx[a])] = (*w)[a];
      return alpha;
    }
  }
  throw InternalError("convex_weights_min_support: hull member without a small representation");
}

std::vector<std::size_t> hull_vertex_indices(const std::vector<SimplexVector>& points) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool duplicate = false;
    std::vector<SimplexVector> others;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (points[j] == points[i]) {
        if (j < i) duplicate = true;
        continue;
      }
      others.push_back(points[j]);
    }
    if (duplicate) continue;
    if (!convex_weights(points[i], others)) out.push_back(i);
  }
  return out;
}

Scalar l1_distance_to_hull(const SimplexVector& t, const VectorFamily& v) {
  const int p = v.order();
  require_same_order(t, p);
  const std::size_t m = v.size();
  if (m == 1) return l1(t, v[0]);
  for (const auto& s : v.members()) {
    if (s == t) return 0;
  }
  // Variables: alpha (m), u (p), v (p).
  const std::size_t n = m + 2 * static_cast<std::size_t>(p);
  LinearProgram lp(n);
  for (std::size_t c = m; c < n; ++c) lp.objective[c] = 1;
  for (int k = 0; k < p; ++k) {
    Vector row(n, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) row[i] = v[i][k];
    row[m + static_cast<std::size_t>(k)] = 1;
    row[m + static_cast<std::size_t>(p + k)] = -1;
    lp.add_constraint(std::move(row), Relation::Equal, t[k]);
  }
  Vector sum(n, Scalar(0));
  for (std::size_t i = 0; i < m; ++i) sum[i] = 1;
  lp.add_constraint(std::move(sum), Relation::Equal, 1);
  const auto res = solve_lp(lp);
  if (res.status != LpStatus::Optimal) throw InternalError("l1 distance LP is not optimal");
  return res.value;
}

bool in_omega(const SimplexVector& t, const VectorFamily& v) { return compare_to_sigma(t, v) >= 0; }

bool in_n(const SimplexVector& t, const VectorFamily& v) { return compare_to_sigma(t, v) <= 0; }

std::size_t support_cover_witness(const SimplexVector& t, const VectorFamily& v) {
  require_same_order(t, v.order());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].support().is_subset_of(t.support())) return i;
  }
  if (in_n(t, v)) throw InternalError("no support-cover witness for a point of N(V)");
  throw InvariantError("support_cover_witness: point " + t.to_string() + " is not in N(V)");
}

std::size_t simplex_grid_size(int p, int denominator) {
  if (p < 1 || denominator < 1) throw InvariantError("grid needs p >= 1 and denominator >= 1");
  // C(denominator + p - 1, p - 1), saturating.
  Scalar c = 1;
  for (int i = 1; i < p; ++i) c = c * (denominator + i) / i;
  if (c > Scalar(std::numeric_limits<std::size_t>::max())) return std::numeric_limits<std::size_t>::max();
  return numerator(c).convert_to<std::size_t>();
}

std::vector<SimplexVector> simplex_grid(int p, int denominator, const Limits& limits) {
  const std::size_t count = simplex_grid_size(p, denominator);
  if (count > limits.max_grid_points) {
    throw LimitError("grid with denominator " + std::to_string(denominator) + " has " + std::to_string(count) +
                     " points, above the cap " + std::to_string(limits.max_grid_points));
  }
  std::vector<SimplexVector> out;
  out.reserve(count);
  std::vector<int> k(static_cast<std::size_t>(p), 0);
  const Scalar step = Scalar(1) / denominator;
  // Recursion over leading coordinates; the last one takes the remainder.
  auto emit = [&](auto& self, int pos, int remaining) -> void {
    if (pos == p - 1) {
      k[static_cast<std::size_t>(pos)] = remaining;
      Vector coords(static_cast<std::size_t>(p));
      for (int i = 0; i < p; ++i) coords[static_cast<std::size_t>(i)] = k[static_cast<std::size_t>(i)] * step;
      out.emplace_back(std::move(coords));
      return;
    }
    for (int a = 0; a <= remaining; ++a) {
      k[static_cast<std::size_t>(pos)] = a;
      self(self, pos + 1, remaining - a);
    }
  };
  emit(emit, 0, denominator);
  return out;
}

std::vector<SimplexVector> omega_grid(const VectorFamily& v, int denominator, const Limits& limits) {
  std::vector<SimplexVector> out;
  for (auto& t : simplex_grid(v.order(), denominator, limits)) {
    if (in_omega(t, v)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace copfaces
