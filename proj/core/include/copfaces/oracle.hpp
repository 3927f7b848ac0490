#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "copfaces/config.hpp"
#include "copfaces/index_set.hpp"
#include "copfaces/simplex_vector.hpp"
#include "copfaces/sym_matrix.hpp"

namespace copfaces {

/// Exact solution of min t^T D t over the standard simplex.
struct SimplexQPResult {
  Scalar min_value;
  /// One relative-interior representative per minimizing support piece, in
  /// support order.
  std::vector<SimplexVector> minimizers;
  std::size_t supports_examined = 0;
};

/// One support-indexed polyhedral piece of a zero set: all t in T with
/// P_+(t) = support satisfying the defining linear system.
struct SupportPiece {
  IndexSet support;
  SimplexVector point;         ///< relative-interior representative
  int degrees_of_freedom = 0;  ///< dimension of the piece
};

/// Throws LimitError when p exceeds the exhaustive cap.
void require_exhaustive_order(int p, const Limits& limits);

/// Global minimum of t^T D t over T by support enumeration: on every face the
/// stationarity system D_SS x = lambda e, e^T x = 1 is solved exactly; lambda
/// is the (unique) value on that face and an exact LP certifies x > 0.
SimplexQPResult min_quad_over_simplex(const SymMatrix& d, const Limits& limits = {});

bool is_copositive(const SymMatrix& d, const Limits& limits = {});

/// Common zeros of copositive matrices with exactly the given support:
/// {t in T : t_S > 0, t_{P\S} = 0, (A_i)_{SS} t_S = 0 for all i}. Returns
/// nullopt when the piece has empty relative interior. The representative
/// maximizes the smallest positive coordinate (exact LP).
std::optional<SupportPiece> common_zero_piece(const std::vector<SymMatrix>& generators, const IndexSet& support);

/// All nonempty pieces of T_0({A}), in support order. Throws
/// NotCopositiveError if A is not copositive.
std::vector<SupportPiece> zero_pieces_of_matrix(const SymMatrix& a, const Limits& limits = {});

/// Pieces with zero degrees of freedom whose support contains no other
/// piece's support.
std::vector<SimplexVector> minimal_zeros_from_pieces(const std::vector<SupportPiece>& pieces);

std::vector<SimplexVector> minimal_zeros_of_matrix(const SymMatrix& a, const Limits& limits = {});

}  // namespace copfaces
