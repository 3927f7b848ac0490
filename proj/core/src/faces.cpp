#include "copfaces/faces.hpp"

#include <algorithm>

#include "copfaces/errors.hpp"
#include "copfaces/linalg.hpp"

namespace copfaces {

FaceSpec::FaceSpec(int order, std::vector<SimplexVector> vectors, std::vector<IndexSet> masks)
    : order_(order), vectors_(std::move(vectors)), masks_(std::move(masks)) {
  if (order_ < 1 || order_ > kMaxOrder) throw DimensionError("face order out of range");
  if (vectors_.size() != masks_.size()) throw InvariantError("face spec needs one mask per vector");
  const IndexSet all = IndexSet::full(order_);
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (vectors_[i].order() != order_) throw DimensionError("face vector of wrong order");
    if (!masks_[i].is_subset_of(all)) throw InvariantError("mask index out of range");
    if (!vectors_[i].support().is_subset_of(masks_[i])) {
      throw InvariantError("mask " + masks_[i].to_string() + " does not contain the support " +
                           vectors_[i].support().to_string() + " of vector " + std::to_string(i + 1));
    }
  }
}

FaceSpec FaceSpec::exposed(int order, std::vector<SimplexVector> vectors) {
  std::vector<IndexSet> masks;
  for (const auto& t : vectors) masks.push_back(t.support());
  return FaceSpec(order, std::move(vectors), std::move(masks));
}

std::optional<VectorFamily> FaceData::family() const {
  if (minimal_zeros.empty()) return std::nullopt;
  return VectorFamily(minimal_zeros);
}

FaceSpec FaceData::as_spec() const { return FaceSpec(order, minimal_zeros, m_sets); }

bool operator==(const FaceData& a, const FaceData& b) {
  return a.order == b.order && a.minimal_zeros == b.minimal_zeros && a.m_sets == b.m_sets;
}

bool satisfies_face_equalities(const SymMatrix& d, const FaceSpec& f) {
  if (d.order() != f.order()) throw DimensionError("matrix and face orders differ");
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (int k : f.masks()[i].indices()) {
      if (matvec_row(d, f.vectors()[i], k) != 0) return false;
    }
  }
  return true;
}

bool face_membership(const SymMatrix& d, const FaceSpec& f, const Limits& limits) {
  return satisfies_face_equalities(d, f) && is_copositive(d, limits);
}

namespace {

// Equalities on M(j), inequalities off M(j). Returns the failed check or "".
std::string linear_face_checks(const SymMatrix& d, const FaceData& face) {
  if (d.order() != face.order) throw DimensionError("matrix and face orders differ");
  for (std::size_t j = 0; j < face.minimal_zeros.size(); ++j) {
    const auto& tau = face.minimal_zeros[j];
    for (int k = 0; k < face.order; ++k) {
      const Scalar r = matvec_row(d, tau, k);
      if (face.m_sets[j].contains(k)) {
        if (r != 0) return "equality";
      } else if (r < 0) {
        return "inequality";
      }
    }
  }
  return "";
}

}  // namespace

bool face_membership_hat(const SymMatrix& d, const FaceData& face, const Limits& limits) {
  return linear_face_checks(d, face).empty() && is_copositive(d, limits);
}

BarMembership::BarMembership(FaceData face, int grid_denominator, const Limits& limits)
    : face_(std::move(face)), family_(face_.family()), limits_(limits) {
  if (family_) {
    omega_points_ = omega_grid(*family_, grid_denominator, limits_);
  } else {
    omega_points_ = simplex_grid(face_.order, grid_denominator, limits_);
  }
}

BarVerdict BarMembership::check(const SymMatrix& d) const {
  BarVerdict v;
  v.failed_check = linear_face_checks(d, face_);
  if (!v.failed_check.empty()) return v;
  for (const auto& t : omega_points_) {
    if (quad_form(d, t) < 0) {
      v.failed_check = "omega-grid";
      v.witness = t;
      return v;
    }
  }
  const auto qp = min_quad_over_simplex(d, limits_);
  if (qp.min_value >= 0) {
    v.member = true;
    return v;
  }
  const auto& t = qp.minimizers.front();
  if (family_ && !in_omega(t, *family_)) {
    throw InternalError("negative minimizer " + t.to_string() + " lies outside Omega(Z)");
  }
  v.failed_check = "oracle";
  v.witness = t;
  return v;
}

const char* to_string(CriterionVerdict verdict) {
  switch (verdict) {
    case CriterionVerdict::CertifiedCopositive: return "certified-copositive";
    case CriterionVerdict::ConsistentWithCriterion: return "consistent";
    case CriterionVerdict::Refuted: return "refuted";
    case CriterionVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

CriterionReport copositivity_via_zeros(const SymMatrix& d, const VectorFamily& v, int grid_denominator,
                                       bool escalate, const Limits& limits) {
  if (d.order() != v.order()) throw DimensionError("matrix and vector family orders differ");
  CriterionReport report;
  // A negative entry of D t refutes only when t^T D t <= 0; otherwise t is not
  // a zero of D and the sufficient conditions simply do not apply.
  bool columns_hold = true;
  for (const auto& t : v.members()) {
    for (int k = 0; k < d.order() && columns_hold; ++k) {
      if (matvec_row(d, t, k) >= 0) continue;
      if (quad_form(d, t) <= 0) {
        report.verdict = CriterionVerdict::Refuted;
        report.reason = "column";
        report.witness = t;
        return report;
      }
      columns_hold = false;
    }
  }

  if (columns_hold) {
    bool hull_is_simplex = true;
    for (int k = 0; k < d.order() && hull_is_simplex; ++k) {
      if (l1_distance_to_hull(SimplexVector::vertex(d.order(), k), v) != 0) hull_is_simplex = false;
    }
    if (hull_is_simplex) {
      report.verdict = CriterionVerdict::CertifiedCopositive;
      report.reason = "hull-is-simplex";
      return report;
    }
  }

  for (const auto& t : omega_grid(v, grid_denominator, limits)) {
    ++report.grid_points_checked;
    if (quad_form(d, t) < 0) {
      report.verdict = CriterionVerdict::Refuted;
      report.reason = "omega-grid";
      report.witness = t;
      return report;
    }
  }
  if (!escalate) {
    report.verdict = columns_hold ? CriterionVerdict::ConsistentWithCriterion : CriterionVerdict::Inconclusive;
    report.reason = columns_hold ? "omega-grid" : "column-not-a-zero";
    return report;
  }
  const auto qp = min_quad_over_simplex(d, limits);
  report.reason = "oracle";
  if (qp.min_value >= 0) {
    report.verdict = CriterionVerdict::CertifiedCopositive;
    return report;
  }
  const auto& t = qp.minimizers.front();
  if (columns_hold && !in_omega(t, v)) {
    throw InternalError("negative minimizer " + t.to_string() + " lies outside Omega(V)");
  }
  report.verdict = CriterionVerdict::Refuted;
  report.witness = t;
  return report;
}

MinimallyActiveResult minimally_active_element(const MatrixSet& q) {
  const auto& gens = q.generators();
  const SymMatrix avg = average(gens);
  const auto catalog = zero_catalog(q);

  if (catalog.pieces.empty()) {
    MinimallyActiveResult r{avg, avg, avg, {}, {}, std::nullopt, true};
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (min_quad_over_simplex(gens[i], q.limits()).min_value > 0) {
        r = MinimallyActiveResult{gens[i], gens[i], gens[i], {}, {}, i, true};
        break;
      }
    }
    return r;
  }

  const auto& z = catalog.minimal_zeros;
  MinimallyActiveResult r{avg, avg, avg, {}, {}, std::nullopt, false};
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (i == j) continue;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].bilinear(z[i].coords(), z[j].coords()) > 0) {
          r.pair_witnesses.push_back({{i, j}, g});
          chosen.push_back(g);
          break;
        }
      }
    }
  }
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (int k : catalog.m_sets[j].complement(q.order()).indices()) {
      std::optional<std::size_t> found;
      for (std::size_t g = 0; g < gens.size() && !found; ++g) {
        if (matvec_row(gens[g], z[j], k) > 0) found = g;
      }
      if (!found) throw InternalError("no generator is positive on a row outside M_Q(j)");
      r.row_witnesses.push_back({{k, j}, *found});
      chosen.push_back(*found);
    }
  }
  if (!chosen.empty()) {
    std::vector<SymMatrix> picked;
    for (auto g : chosen) picked.push_back(gens[g]);
    r.tilde_part = average(picked);
  }
  r.element = Scalar(1, 2) * (r.tilde_part + r.averaged_part);
  return r;
}

FaceData minimal_face(const MatrixSet& q) {
  FaceData f;
  f.order = q.order();
  f.minimal_zeros = minimal_zeros(q);
  f.m_sets = m_sets(q, f.minimal_zeros);
  if (auto fam = f.family()) f.sigma = fam->sigma();
  f.source = "matrix_set";
  return f;
}

FaceData face_of_matrix(const SymMatrix& a, const Limits& limits) {
  FaceData f = minimal_face(MatrixSet({a}, limits));
  f.source = "matrix";
  return f;
}

namespace {

// Basis of span(V)^perp.
std::vector<Vector> orthogonal_basis(const FaceSpec& f) {
  if (f.empty()) {
    std::vector<Vector> basis;
    for (int k = 0; k < f.order(); ++k) {
      Vector e(static_cast<std::size_t>(f.order()), Scalar(0));
      e[static_cast<std::size_t>(k)] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  RationalMatrix rows(0, static_cast<std::size_t>(f.order()));
  for (const auto& t : f.vectors()) rows.append_row(t.coords());
  return nullspace_basis(rows);
}

// Entries (a, b) of the nonnegative part that the face leaves free.
std::vector<std::vector<bool>> free_pattern(const FaceSpec& f) {
  const int p = f.order();
  std::vector<std::vector<bool>> allowed(static_cast<std::size_t>(p), std::vector<bool>(static_cast<std::size_t>(p), true));
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (int k : f.masks()[i].indices()) {
      for (int b : f.vectors()[i].support().indices()) {
        allowed[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)] = false;
        allowed[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)] = false;
      }
    }
  }
  return allowed;
}

}  // namespace

SymMatrix generic_face_element(const FaceSpec& f) {
  const int p = f.order();
  SymMatrix d(p);
  for (const auto& b : orthogonal_basis(f)) d += SymMatrix::outer(b);
  const auto allowed = free_pattern(f);
  for (int a = 0; a < p; ++a) {
    for (int b = a; b < p; ++b) {
      if (allowed[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) d.add(a, b, Scalar(1));
    }
  }
  return d;
}

SymMatrix sample_face_element(const FaceSpec& f, Rng& rng) {
  const int p = f.order();
  SymMatrix d(p);
  const auto basis = orthogonal_basis(f);
  std::uniform_int_distribution<int> coin(0, 3);
  if (!basis.empty()) {
    const std::size_t terms = basis.size() + 1;
    for (std::size_t r = 0; r < terms; ++r) {
      Vector w(static_cast<std::size_t>(p), Scalar(0));
      for (const auto& b : basis) {
        const Scalar c = random_rational(rng, 3, 2);
        for (int k = 0; k < p; ++k) w[static_cast<std::size_t>(k)] += c * b[static_cast<std::size_t>(k)];
      }
      d += random_nonnegative(rng, 2, 3) * SymMatrix::outer(w);
    }
  }
  const auto allowed = free_pattern(f);
  for (int a = 0; a < p; ++a) {
    for (int b = a; b < p; ++b) {
      if (!allowed[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
      if (coin(rng) == 0) continue;
      d.add(a, b, random_nonnegative(rng, 3, 4));
    }
  }
  return d;
}

FaceData canonicalize_face(const FaceSpec& f, const Limits& limits) {
  const SymMatrix g = generic_face_element(f);
  if (!satisfies_face_equalities(g, f)) throw InternalError("generic element violates the face equalities");
  FaceData out;
  out.order = f.order();
  out.minimal_zeros = minimal_zeros_of_matrix(g, limits);
  for (const auto& tau : out.minimal_zeros) out.m_sets.push_back(annihilated_rows({g}, tau));
  if (auto fam = out.family()) out.sigma = fam->sigma();
  out.heuristic = f.order() >= 5;
  out.source = "face_spec";

  // Every t(i) is a combination of minimal zeros whose M-sets contain L(i).
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto alpha = convex_weights_min_support(f.vectors()[i], out.minimal_zeros);
    if (!alpha) throw InternalError("face vector " + std::to_string(i + 1) + " is outside conv Z_K");
    for (std::size_t j = 0; j < alpha->size(); ++j) {
      if ((*alpha)[j] > 0 && !f.masks()[i].is_subset_of(out.m_sets[j])) {
        throw InternalError("mask of face vector " + std::to_string(i + 1) + " is not inside M_K(" +
                            std::to_string(j + 1) + ")");
      }
    }
  }
  return out;
}

bool is_exposed(const FaceSpec& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!(f.masks()[i] == f.vectors()[i].support())) return false;
  }
  return true;
}

}  // namespace copfaces
