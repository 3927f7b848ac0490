#pragma once

#include <string>
#include <utility>

#include "copfaces/index_set.hpp"
#include "copfaces/scalar.hpp"

namespace copfaces {

/// A point of the standard simplex T = {t >= 0 : e^T t = 1}, with its positive
/// support cached. Immutable once constructed.
class SimplexVector {
 public:
  /// Throws InvariantError unless every coordinate is >= 0 and they sum to 1.
  explicit SimplexVector(Vector coords);

  /// Divides a nonnegative, nonzero vector by its coordinate sum.
  static SimplexVector normalized(Vector weights);
  static SimplexVector vertex(int p, int k);
  static SimplexVector barycenter(int p);
  static SimplexVector barycenter(const IndexSet& support, int p);

  [[nodiscard]] int order() const { return static_cast<int>(coords_.size()); }
  [[nodiscard]] const Vector& coords() const { return coords_; }
  [[nodiscard]] const Scalar& operator[](int k) const { return coords_[static_cast<std::size_t>(k)]; }

  /// P_+(t).
  [[nodiscard]] const IndexSet& support() const { return support_; }
  /// P_0(t).
  [[nodiscard]] IndexSet null_set() const { return support_.complement(order()); }

  [[nodiscard]] std::string to_string() const { return copfaces::to_string(coords_); }

  friend bool operator==(const SimplexVector& a, const SimplexVector& b) { return a.coords_ == b.coords_; }

 private:
  Vector coords_;
  IndexSet support_;
};

/// (P_+(t), P_0(t)).
std::pair<IndexSet, IndexSet> support(const SimplexVector& t);

/// Lexicographic order on coordinates; used to canonicalize output lists.
bool coordinate_less(const SimplexVector& a, const SimplexVector& b);

}  // namespace copfaces
