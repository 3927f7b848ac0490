#pragma once

#include <optional>
#include <string>
#include <vector>

#include "copfaces/config.hpp"
#include "copfaces/faces.hpp"

namespace copfaces {

enum class DualFlavor { G, GTilde, GBar };

const char* to_string(DualFlavor flavor);
/// "G", "G-tilde" or "G-bar"; throws ParseError otherwise.
DualFlavor parse_dual_flavor(const std::string& text);

struct RankOneTerm {
  Scalar alpha;
  SimplexVector mu;
};

struct CrossTerm {
  SimplexVector anchor;
  Vector lambda;
};

struct DualContext {
  FaceSpec spec;
  std::optional<FaceData> data;
};

/// D = sum alpha_i mu(i) mu(i)^T + sum (lambda(j) a(j)^T + a(j) lambda(j)^T).
/// G and G-tilde anchor on the face vectors t(i); G-bar on the minimal zeros.
struct DualDecomposition {
  DualFlavor flavor = DualFlavor::GTilde;
  std::vector<RankOneTerm> rank_one_terms;
  std::vector<CrossTerm> cross_terms;
  DualContext context{FaceSpec::improper(1), std::nullopt};
};

/// p(p+1)/2.
std::size_t max_rank_one_terms(int p);

/// First violated invariant, or nullopt.
std::optional<std::string> validate(const DualDecomposition& dd);

/// Throws InvariantError naming the violated invariant.
SymMatrix assemble(const DualDecomposition& dd);

/// Sum of terms without validation.
SymMatrix assemble_unchecked(const DualDecomposition& dd);

/// D . assemble(dd) (trace inner product).
Scalar pairing(const SymMatrix& d, const DualDecomposition& dd);

/// D . assemble(dd) >= 0. Throws InvariantError if D is not in the context
/// face.
bool verify_duality(const SymMatrix& d, const DualDecomposition& dd, const Limits& limits = {});

/// Rewrites a G-tilde decomposition over the minimal zeros of the face:
/// anchors are re-expressed over Z_K, rank-one terms inside conv Z_K are
/// absorbed into cross terms, and terms with 0 < rho < sigma are peeled along
/// their support-cover witness until the remainder lies in Omega(Z_K).
/// The assembled matrix is unchanged.
DualDecomposition promote_tilde_to_bar(const DualDecomposition& dd, const Limits& limits = {});

/// Exact obstruction to G-membership found through a zero diagonal entry.
struct GRefutation {
  bool refuted = false;
  int row = 0;  ///< 0-based
  int col = 0;  ///< 0-based
  int pivot = 0;  ///< isolated index b with D_bb = 0 (0-based)
  Scalar required;
  Scalar derivable;
  std::vector<std::string> trace;
};

/// Looks for an index b with t_b(i) = 0 and b outside L(i) for every i, and
/// D_bb = 0; then every G-decomposition has zero row b, so any nonzero D_ab
/// refutes membership.
GRefutation refute_g_membership(const SymMatrix& d, const FaceSpec& f);

/// The p = 2 fixture t(1) = (1, 0), L(1) = {1}, D = [[0, 1], [1, 0]].
GRefutation refute_g_membership_worked_example();

/// LP search for a G or G-tilde decomposition whose mu(i) lie on the simplex
/// grid with the given denominator. nullopt if none exists on that grid.
std::optional<DualDecomposition> search_decomposition(const SymMatrix& d, const FaceSpec& f, DualFlavor flavor,
                                                      int grid_denominator, const Limits& limits = {});

/// Random valid G-tilde element over the face vectors.
DualDecomposition sample_tilde_decomposition(const FaceSpec& f, Rng& rng);

/// Random valid G-bar element; mu(i) drawn from the Omega(Z_K) grid.
DualDecomposition sample_bar_decomposition(const FaceSpec& f, const FaceData& data, Rng& rng,
                                           int grid_denominator = 8, const Limits& limits = {});

}  // namespace copfaces
