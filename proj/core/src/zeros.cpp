#include "copfaces/zeros.hpp"

#include "copfaces/errors.hpp"

namespace copfaces {

MatrixSet::MatrixSet(std::vector<SymMatrix> generators, const Limits& limits)
    : generators_(std::move(generators)), limits_(limits) {
  if (generators_.empty()) throw InvariantError("matrix set needs at least one generator");
  order_ = generators_.front().order();
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].order() != order_) throw DimensionError("generators of different order");
    if (!is_copositive(generators_[i], limits_)) {
      throw NotCopositiveError("generator " + std::to_string(i + 1) + " is not copositive");
    }
  }
}

std::vector<SupportPiece> zero_set(const MatrixSet& q) {
  require_exhaustive_order(q.order(), q.limits());
  std::vector<SupportPiece> pieces;
  for (const auto& s : supports_by_cardinality(q.order())) {
    if (auto piece = common_zero_piece(q.generators(), s)) pieces.push_back(std::move(*piece));
  }
  return pieces;
}

std::vector<SimplexVector> minimal_zeros(const MatrixSet& q) { return minimal_zeros_from_pieces(zero_set(q)); }

IndexSet annihilated_rows(const std::vector<SymMatrix>& matrices, const SimplexVector& tau) {
  if (matrices.empty()) throw InvariantError("annihilated_rows: empty matrix list");
  const int p = tau.order();
  IndexSet rows = IndexSet::full(p);
  for (const auto& a : matrices) {
    if (a.order() != p) throw DimensionError("annihilated_rows: order mismatch");
    for (int k : rows.indices()) {
      if (matvec_row(a, tau, k) != 0) rows.erase(k);
    }
  }
  return rows;
}

std::vector<IndexSet> m_sets(const MatrixSet& q, const std::vector<SimplexVector>& z) {
  std::vector<IndexSet> out;
  out.reserve(z.size());
  for (const auto& tau : z) {
    if (tau.order() != q.order()) throw DimensionError("m_sets: order mismatch");
    for (const auto& a : q.generators()) {
      if (quad_form(a, tau) != 0) throw InvariantError("m_sets: " + tau.to_string() + " is not a zero of the set");
    }
    out.push_back(annihilated_rows(q.generators(), tau));
  }
  return out;
}

ZeroCatalog zero_catalog(const MatrixSet& q) {
  ZeroCatalog c;
  c.pieces = zero_set(q);
  c.minimal_zeros = minimal_zeros_from_pieces(c.pieces);
  c.m_sets = m_sets(q, c.minimal_zeros);
  return c;
}

bool slater_holds(const MatrixSet& q) {
  const bool empty = zero_set(q).empty();
  const bool average_positive = min_quad_over_simplex(average(q.generators()), q.limits()).min_value > 0;
  if (empty != average_positive) throw InternalError("Slater test disagrees with the generator average");
  return empty;
}

}  // namespace copfaces
