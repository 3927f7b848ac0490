#pragma once

#include <string>
#include <vector>

#include "copfaces/scalar.hpp"
#include "copfaces/simplex_vector.hpp"

namespace copfaces {

/// Symmetric matrix of exact rationals. Only the upper triangle is stored, so
/// symmetry holds by construction.
class SymMatrix {
 public:
  explicit SymMatrix(int order);

  static SymMatrix zero(int order) { return SymMatrix(order); }
  static SymMatrix identity(int order);
  /// Full square rows; throws InvariantError if not symmetric.
  static SymMatrix from_rows(const std::vector<Vector>& rows);
  static SymMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  /// a b^T + b a^T.
  static SymMatrix symmetric_outer(const Vector& a, const Vector& b);
  /// a a^T.
  static SymMatrix outer(const Vector& a);

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] const Scalar& operator()(int i, int j) const { return data_[slot(i, j)]; }
  void set(int i, int j, Scalar value) { data_[slot(i, j)] = std::move(value); }
  void add(int i, int j, const Scalar& value) { data_[slot(i, j)] += value; }

  [[nodiscard]] std::vector<Vector> rows() const;
  [[nodiscard]] Vector apply(const Vector& v) const;
  [[nodiscard]] Scalar quadratic(const Vector& v) const;
  /// u^T D v.
  [[nodiscard]] Scalar bilinear(const Vector& u, const Vector& v) const;

  SymMatrix& operator+=(const SymMatrix& other);
  SymMatrix& operator-=(const SymMatrix& other);
  SymMatrix& operator*=(const Scalar& factor);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(const Scalar& s, SymMatrix a) { return a *= s; }
  friend bool operator==(const SymMatrix& a, const SymMatrix& b) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  [[nodiscard]] std::size_t slot(int i, int j) const;

  int order_;
  std::vector<Scalar> data_;
};

/// t^T D t.
Scalar quad_form(const SymMatrix& d, const SimplexVector& t);

/// e_k^T D t (k is 0-based).
Scalar matvec_row(const SymMatrix& d, const SimplexVector& t, int k);

/// Trace inner product A • B.
Scalar inner(const SymMatrix& a, const SymMatrix& b);

/// Uniform average of a nonempty list.
SymMatrix average(const std::vector<SymMatrix>& matrices);

}  // namespace copfaces
