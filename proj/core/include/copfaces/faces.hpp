#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "copfaces/config.hpp"
#include "copfaces/geometry.hpp"
#include "copfaces/index_set.hpp"
#include "copfaces/simplex_vector.hpp"
#include "copfaces/sym_matrix.hpp"
#include "copfaces/zeros.hpp"

namespace copfaces {

/// Raw face data: K(V, L) = {D in COP : e_k^T D t(i) = 0 for k in L(i)}.
/// An empty V describes the improper face COP^p itself.
class FaceSpec {
 public:
  /// Throws InvariantError unless P_+(t(i)) is contained in L(i) for every i.
  FaceSpec(int order, std::vector<SimplexVector> vectors, std::vector<IndexSet> masks);

  static FaceSpec improper(int order) { return FaceSpec(order, {}, {}); }
  /// L(i) = P_+(t(i)).
  static FaceSpec exposed(int order, std::vector<SimplexVector> vectors);

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] std::size_t size() const { return vectors_.size(); }
  [[nodiscard]] bool empty() const { return vectors_.empty(); }
  [[nodiscard]] const std::vector<SimplexVector>& vectors() const { return vectors_; }
  [[nodiscard]] const std::vector<IndexSet>& masks() const { return masks_; }

 private:
  int order_;
  std::vector<SimplexVector> vectors_;
  std::vector<IndexSet> masks_;
};

/// Canonical face data (Z_K, M_K(j), sigma(Z_K)).
struct FaceData {
  int order = 0;
  std::vector<SimplexVector> minimal_zeros;
  std::vector<IndexSet> m_sets;
  /// sigma(Z_K); empty when Z_K is empty.
  std::optional<Scalar> sigma;
  /// Set when Z_K, M_K come from an inner approximation (order >= 5).
  bool heuristic = false;
  /// "face_spec", "matrix_set" or "matrix".
  std::string source;

  [[nodiscard]] std::optional<VectorFamily> family() const;
  /// V = Z_K, L(j) = M_K(j).
  [[nodiscard]] FaceSpec as_spec() const;
};

bool operator==(const FaceData& a, const FaceData& b);

/// Linear conditions e_k^T D t(i) = 0, k in L(i), without the cone check.
bool satisfies_face_equalities(const SymMatrix& d, const FaceSpec& f);

/// D in K(V, L).
bool face_membership(const SymMatrix& d, const FaceSpec& f, const Limits& limits = {});

/// D in K-hat: copositive, e_k^T D tau(j) = 0 on M_K(j) and >= 0 off it.
bool face_membership_hat(const SymMatrix& d, const FaceData& face, const Limits& limits = {});

struct BarVerdict {
  bool member = false;
  /// Point of Omega(Z_K) with t^T D t < 0, when the quadratic part fails.
  std::optional<SimplexVector> witness;
  /// Name of the failed check ("equality", "inequality", "omega-grid", "oracle").
  std::string failed_check;
};

/// Membership in K-bar: the linear conditions at each tau(j) plus
/// t^T D t >= 0 on Omega(Z_K). Omega is sampled on a grid first; survivors are
/// escalated to the exact oracle, whose minimizer must lie in Omega.
class BarMembership {
 public:
  BarMembership(FaceData face, int grid_denominator, const Limits& limits = {});

  [[nodiscard]] BarVerdict check(const SymMatrix& d) const;
  [[nodiscard]] bool contains(const SymMatrix& d) const { return check(d).member; }
  [[nodiscard]] const std::vector<SimplexVector>& omega_points() const { return omega_points_; }

 private:
  FaceData face_;
  std::optional<VectorFamily> family_;
  std::vector<SimplexVector> omega_points_;
  Limits limits_;
};

/// Inconclusive: some D t(i) has a negative entry although t(i) is not a
/// zero of D, and the oracle was not consulted.
enum class CriterionVerdict { CertifiedCopositive, ConsistentWithCriterion, Refuted, Inconclusive };

const char* to_string(CriterionVerdict verdict);

struct CriterionReport {
  CriterionVerdict verdict = CriterionVerdict::ConsistentWithCriterion;
  std::optional<SimplexVector> witness;
  /// Human-readable reason ("column", "column-not-a-zero", "omega-grid",
/// "hull-is-simplex", "oracle").
  std::string reason;
  std::size_t grid_points_checked = 0;
};

/// Copositivity through D t(i) >= 0 and t^T D t >= 0 on Omega(V). Grid
/// checks alone never certify: certification needs conv V = T or the exact
/// oracle (used when `escalate` is set).
CriterionReport copositivity_via_zeros(const SymMatrix& d, const VectorFamily& v, int grid_denominator,
                                       bool escalate = true, const Limits& limits = {});

struct MinimallyActiveResult {
  SymMatrix element;
  SymMatrix tilde_part;
  SymMatrix averaged_part;
  /// ((i, j), generator) for (i, j) in U_+, 0-based.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> pair_witnesses;
  /// ((k, j), generator) for k outside M_Q(j), 0-based.
  std::vector<std::pair<std::pair<int, std::size_t>, std::size_t>> row_witnesses;
  /// Slater case: index of the returned generator, or nullopt for the average.
  std::optional<std::size_t> slater_generator;
  bool slater = false;
};

MinimallyActiveResult minimally_active_element(const MatrixSet& q);

FaceData minimal_face(const MatrixSet& q);

FaceData face_of_matrix(const SymMatrix& a, const Limits& limits = {});

/// Relative-interior element of K(V, L) built from the PSD-plus-nonnegative
/// inner representation: sum of b b^T over a basis of span(V)^perp plus the
/// all-ones pattern on the free entries of the nonnegative part.
SymMatrix generic_face_element(const FaceSpec& f);

/// Random element of the same inner representation, for sampling K.
SymMatrix sample_face_element(const FaceSpec& f, Rng& rng);

/// (Z_K, M_K) for K(V, L). Exact for order <= 4; flagged heuristic above.
FaceData canonicalize_face(const FaceSpec& f, const Limits& limits = {});

bool is_exposed(const FaceSpec& f);

}  // namespace copfaces
