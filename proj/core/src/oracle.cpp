#include "copfaces/oracle.hpp"

#include <algorithm>
#include <string>

#include "copfaces/errors.hpp"
#include "copfaces/linalg.hpp"
#include "copfaces/lp.hpp"

namespace copfaces {

namespace {

struct Candidate {
  IndexSet support;
  Scalar value;
  std::vector<int> members;
};

// Expands x (indexed by the members of S) to a length-p simplex vector.
SimplexVector embed(const std::vector<int>& members, const Vector& x, int p) {
  Vector coords(static_cast<std::size_t>(p), Scalar(0));
  for (std::size_t a = 0; a < members.size(); ++a) coords[static_cast<std::size_t>(members[a])] = x[a];
  return SimplexVector(std::move(coords));
}

// Stationary value on the face spanned by S, if the KKT system is consistent.
std::optional<Candidate> stationary_value(const SymMatrix& d, const IndexSet& s) {
  const auto members = s.indices();
  const std::size_t k = members.size();
  RationalMatrix m(k + 1, k + 1);
  Vector rhs(k + 1, Scalar(0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) m(a, b) = d(members[a], members[b]);
    m(a, k) = -1;
    m(k, a) = 1;
  }
  rhs[k] = 1;
  auto sol = solve_particular(m, rhs);
  if (!sol) return std::nullopt;
  return Candidate{s, (*sol)[k], members};
}

// Points x > 0 with D_SS x = value * e, e^T x = 1.
std::optional<Vector> interior_stationary_point(const SymMatrix& d, const Candidate& c) {
  const std::size_t k = c.members.size();
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t a = 0; a < k; ++a) {
    Vector row(k);
    for (std::size_t b = 0; b < k; ++b) row[b] = d(c.members[a], c.members[b]);
    rows.push_back(std::move(row));
    rhs.push_back(c.value);
  }
  rows.emplace_back(k, Scalar(1));
  rhs.emplace_back(1);
  return strictly_positive_solution(rows, rhs);
}

std::vector<Candidate> sorted_candidates(const SymMatrix& d) {
  std::vector<Candidate> out;
  for (const auto& s : supports_by_cardinality(d.order())) {
    if (auto c = stationary_value(d, s)) out.push_back(std::move(*c));
  }
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  return out;
}

}  // namespace

void require_exhaustive_order(int p, const Limits& limits) {
  if (p < 1) throw DimensionError("order must be at least 1");
  if (p > limits.max_exhaustive_order || p > 30) {
    throw LimitError("order " + std::to_string(p) + " exceeds the exhaustive limit " +
                     std::to_string(limits.max_exhaustive_order));
  }
}

SimplexQPResult min_quad_over_simplex(const SymMatrix& d, const Limits& limits) {
  const int p = d.order();
  require_exhaustive_order(p, limits);
  SimplexQPResult result;
  result.supports_examined = (std::size_t{1} << p) - 1;

  std::vector<std::pair<IndexSet, SimplexVector>> found;
  std::optional<Scalar> best;
  for (const auto& c : sorted_candidates(d)) {
    if (best && c.value > *best) break;
    auto x = interior_stationary_point(d, c);
    if (!x) continue;
    best = c.value;
    found.emplace_back(c.support, embed(c.members, *x, p));
  }
  // Vertices are always stationary, so the loop cannot finish empty.
  if (!best) throw InternalError("simplex minimization found no stationary point");
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return support_order_less(a.first, b.first); });
  result.min_value = *best;
  for (auto& f : found) result.minimizers.push_back(std::move(f.second));
  return result;
}

bool is_copositive(const SymMatrix& d, const Limits& limits) {
  const int p = d.order();
  require_exhaustive_order(p, limits);
  bool nonnegative = true;
  for (int i = 0; i < p; ++i) {
    if (d(i, i) < 0) return false;
    for (int j = i + 1; j < p; ++j) {
      if (d(i, j) < 0) nonnegative = false;
    }
  }
  if (nonnegative) return true;
  for (const auto& c : sorted_candidates(d)) {
    if (c.value >= 0) break;
    if (interior_stationary_point(d, c)) return false;
  }
  return true;
}

std::optional<SupportPiece> common_zero_piece(const std::vector<SymMatrix>& generators, const IndexSet& support) {
  if (generators.empty() || support.empty()) throw InvariantError("common_zero_piece: empty input");
  const int p = generators.front().order();
  const auto members = support.indices();
  const std::size_t k = members.size();

  RationalMatrix stacked(0, k);
  for (const auto& a : generators) {
    if (a.order() != p) throw DimensionError("generators of different order");
    for (int r : members) {
      Vector row(k);
      for (std::size_t b = 0; b < k; ++b) row[b] = a(r, members[b]);
      stacked.append_row(row);
    }
  }
  const auto ech = reduced_row_echelon(stacked);
  const std::size_t nullity = k - ech.pivots.size();
  if (nullity == 0) return std::nullopt;

  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    rows.push_back(ech.reduced.row(r));
    rhs.emplace_back(0);
  }
  rows.emplace_back(k, Scalar(1));
  rhs.emplace_back(1);
  auto x = strictly_positive_solution(rows, rhs);
  if (!x) return std::nullopt;
  return SupportPiece{support, embed(members, *x, p), static_cast<int>(nullity) - 1};
}

std::vector<SupportPiece> zero_pieces_of_matrix(const SymMatrix& a, const Limits& limits) {
  if (!is_copositive(a, limits)) throw NotCopositiveError("matrix is not copositive");
  std::vector<SupportPiece> pieces;
  for (const auto& s : supports_by_cardinality(a.order())) {
    if (auto piece = common_zero_piece({a}, s)) pieces.push_back(std::move(*piece));
  }
  return pieces;
}

std::vector<SimplexVector> minimal_zeros_from_pieces(const std::vector<SupportPiece>& pieces) {
  std::vector<SimplexVector> out;
  for (const auto& piece : pieces) {
    if (piece.degrees_of_freedom != 0) continue;
    const bool has_smaller = std::any_of(pieces.begin(), pieces.end(), [&](const SupportPiece& other) {
      return other.support.is_proper_subset_of(piece.support);
    });
    if (!has_smaller) out.push_back(piece.point);
  }
  return out;
}

std::vector<SimplexVector> minimal_zeros_of_matrix(const SymMatrix& a, const Limits& limits) {
  return minimal_zeros_from_pieces(zero_pieces_of_matrix(a, limits));
}

}  // namespace copfaces
