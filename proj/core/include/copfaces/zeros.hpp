#pragma once

#include <vector>

#include "copfaces/config.hpp"
#include "copfaces/index_set.hpp"
#include "copfaces/oracle.hpp"
#include "copfaces/simplex_vector.hpp"
#include "copfaces/sym_matrix.hpp"

namespace copfaces {

/// Convex hull of finitely many copositive generators.
class MatrixSet {
 public:
  /// Throws InvariantError on an empty list, DimensionError on mixed orders
  /// and NotCopositiveError if some generator is not copositive.
  explicit MatrixSet(std::vector<SymMatrix> generators, const Limits& limits = {});

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] const std::vector<SymMatrix>& generators() const { return generators_; }
  [[nodiscard]] std::size_t size() const { return generators_.size(); }
  [[nodiscard]] const Limits& limits() const { return limits_; }

 private:
  std::vector<SymMatrix> generators_;
  int order_ = 0;
  Limits limits_;
};

/// T_0(Q) as pieces, its vertices Z_Q and the aligned sets M_Q(j).
struct ZeroCatalog {
  std::vector<SupportPiece> pieces;
  std::vector<SimplexVector> minimal_zeros;
  std::vector<IndexSet> m_sets;
};

std::vector<SupportPiece> zero_set(const MatrixSet& q);

std::vector<SimplexVector> minimal_zeros(const MatrixSet& q);

/// {k : e_k^T A tau = 0 for every A in the list}.
IndexSet annihilated_rows(const std::vector<SymMatrix>& matrices, const SimplexVector& tau);

/// M_Q(j) for each given minimal zero. Throws InvariantError if some tau is
/// not a zero of Q.
std::vector<IndexSet> m_sets(const MatrixSet& q, const std::vector<SimplexVector>& z);

ZeroCatalog zero_catalog(const MatrixSet& q);

/// T_0(Q) is empty. The generator average is checked to agree; a mismatch
/// throws InternalError.
bool slater_holds(const MatrixSet& q);

}  // namespace copfaces
