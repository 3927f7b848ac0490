#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "copfaces/config.hpp"
#include "copfaces/faces.hpp"
#include "copfaces/geometry.hpp"
#include "copfaces/sym_matrix.hpp"

namespace copfaces {

/// min c^T x  s.t.  A(x) = A_0 + sum_i x_i A_i is copositive, x free.
class LinearCopProblem {
 public:
  /// constraint_map holds A_0, A_1, ..., A_n; n = objective.size() >= 1.
  LinearCopProblem(Vector objective, std::vector<SymMatrix> constraint_map);

  [[nodiscard]] int order() const { return map_.front().order(); }
  [[nodiscard]] std::size_t num_variables() const { return objective_.size(); }
  [[nodiscard]] const Vector& objective() const { return objective_; }
  [[nodiscard]] const std::vector<SymMatrix>& constraint_map() const { return map_; }

  [[nodiscard]] SymMatrix evaluate(const Vector& x) const;
  /// Coefficients of the affine function x -> u^T A(x) v: (u^T A_i v)_i and u^T A_0 v.
  [[nodiscard]] std::pair<Vector, Scalar> bilinear_form(const Vector& u, const Vector& v) const;

 private:
  Vector objective_;
  std::vector<SymMatrix> map_;
};

bool feasible_membership(const LinearCopProblem& prob, const Vector& x, const Limits& limits = {});

struct EquivalentVerdict {
  bool member = false;
  /// "column", "omega-grid" or "oracle" when not a member.
  std::string failed_check;
  std::optional<SimplexVector> witness;
};

/// Membership in X(V) = {x : A(x) t(i) >= 0, t^T A(x) t >= 0 on Omega(V)}.
/// Omega is sampled on the grid and then escalated to the exact oracle. An
/// empty V means Omega = T.
EquivalentVerdict equivalent_membership(const LinearCopProblem& prob, const Vector& x,
                                        const std::vector<SimplexVector>& v, int grid_denominator,
                                        const Limits& limits = {});

enum class CertStatus { Certified, Inconclusive };
const char* to_string(CertStatus status);

struct ZeroRecord {
  SimplexVector tau;
  CertStatus status = CertStatus::Inconclusive;
  /// Maximum of tau^T A(x) tau over the outer relaxation (0 when certified).
  std::optional<Scalar> relaxation_max;
};

struct RowRecord {
  std::size_t zero = 0;  ///< index into zeros
  int row = 0;           ///< 0-based k
  CertStatus status = CertStatus::Inconclusive;
};

struct ImmobileCertificate {
  int order = 0;
  std::vector<ZeroRecord> zeros;
  /// M_D(j) aligned with zeros: rows k with e_k^T A(x) tau(j) = 0 on X.
  std::vector<IndexSet> m_sets;
  /// Off-support rows in m_sets and how their membership was settled.
  std::vector<RowRecord> rows;
  /// Feasible points used to generate the candidates.
  std::vector<Vector> samples;
  std::size_t cuts = 0;
  std::size_t lp_solves = 0;

  [[nodiscard]] bool complete() const;
  [[nodiscard]] std::vector<SimplexVector> zero_vectors() const;
};

struct ImmobileOptions {
  std::size_t budget = 200;  ///< maximum number of relaxation LPs
  int grid_denominator = 8;
  Limits limits;
};

/// Exchange loop: common minimal zeros of sampled feasible A(x) are
/// candidates; each is certified by an exact LP over the grid relaxation
/// (maximum 0) or refuted by a new feasible sample.
ImmobileCertificate find_immobile_zeros(const LinearCopProblem& prob, const ImmobileOptions& options = {});

struct RegularizedProblem {
  LinearCopProblem base;
  /// tau(j): finite constraints A(x) tau(j) >= 0.
  std::vector<SimplexVector> anchors;
  std::vector<IndexSet> m_sets;
  /// sigma(Z); empty when Z is empty (Omega = T).
  std::optional<Scalar> sigma;
  int grid_denominator = 8;
  /// Grid sample of Omega(Z).
  std::vector<SimplexVector> omega_points;
};

/// Throws InvariantError if the certificate has inconclusive entries.
RegularizedProblem regularize(const LinearCopProblem& prob, const ImmobileCertificate& cert, int grid_denominator = 8,
                              const Limits& limits = {});

/// Same problem with no anchors and Omega = T.
RegularizedProblem unregularized(const LinearCopProblem& prob, int grid_denominator = 8, const Limits& limits = {});

FaceData minimal_face_of_problem(const LinearCopProblem& prob, const ImmobileCertificate& cert);

enum class SolveStatus { Optimal, Infeasible, Unbounded, RefinementCapExceeded };
const char* to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  Vector x;
  Scalar value;
  std::size_t rounds = 0;
  /// One entry per added cut: the point and its (negative) value at the LP solution.
  std::vector<std::pair<SimplexVector, Scalar>> cuts;
  bool oracle_copositive = false;
};

/// LP over the finite constraints and the Omega grid, then an oracle check of
/// A(x*); a failed check adds a cut at the oracle minimizer and re-solves.
SolveResult solve_discretized(const RegularizedProblem& reg, std::size_t max_rounds = 64, const Limits& limits = {});

}  // namespace copfaces
