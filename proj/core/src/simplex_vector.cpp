#include "copfaces/simplex_vector.hpp"

#include <algorithm>

#include "copfaces/config.hpp"
#include "copfaces/errors.hpp"

namespace copfaces {

SimplexVector::SimplexVector(Vector coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvariantError("simplex vector of order 0");
  if (coords_.size() > static_cast<std::size_t>(kMaxOrder)) throw LimitError("simplex vector order too large");
  Scalar sum = 0;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] < 0) throw InvariantError("negative coordinate in simplex vector " + copfaces::to_string(coords_));
    if (coords_[k] > 0) support_.insert(static_cast<int>(k));
    sum += coords_[k];
  }
  if (sum != 1) {
    throw InvariantError("coordinates of " + copfaces::to_string(coords_) + " sum to " + to_display(sum) + ", not 1");
  }
}

SimplexVector SimplexVector::normalized(Vector weights) {
  Scalar sum = 0;
  for (const auto& w : weights) {
    if (w < 0) throw InvariantError("cannot normalize a vector with negative entries");
    sum += w;
  }
  if (sum == 0) throw InvariantError("cannot normalize the zero vector");
  for (auto& w : weights) w /= sum;
  return SimplexVector(std::move(weights));
}

SimplexVector SimplexVector::vertex(int p, int k) {
  if (k < 0 || k >= p) throw DimensionError("vertex index out of range");
  Vector v(static_cast<std::size_t>(p), Scalar(0));
  v[static_cast<std::size_t>(k)] = 1;
  return SimplexVector(std::move(v));
}

SimplexVector SimplexVector::barycenter(int p) { return barycenter(IndexSet::full(p), p); }

SimplexVector SimplexVector::barycenter(const IndexSet& support, int p) {
  if (support.empty()) throw InvariantError("barycenter of an empty support");
  Vector v(static_cast<std::size_t>(p), Scalar(0));
  const Scalar w(1, support.size());
  for (int k : support.indices()) v[static_cast<std::size_t>(k)] = w;
  return SimplexVector(std::move(v));
}

std::pair<IndexSet, IndexSet> support(const SimplexVector& t) { return {t.support(), t.null_set()}; }

bool coordinate_less(const SimplexVector& a, const SimplexVector& b) {
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end());
}

}  // namespace copfaces
