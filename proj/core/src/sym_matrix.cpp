#include "copfaces/sym_matrix.hpp"

#include <algorithm>

#include "copfaces/config.hpp"
#include "copfaces/errors.hpp"

namespace copfaces {

SymMatrix::SymMatrix(int order) : order_(order) {
  if (order < 1) throw InvariantError("matrix order must be >= 1");
  if (order > kMaxOrder) throw LimitError("matrix order too large");
  data_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order + 1) / 2, Scalar(0));
}

std::size_t SymMatrix::slot(int i, int j) const {
  if (i < 0 || j < 0 || i >= order_ || j >= order_) throw DimensionError("matrix index out of range");
  if (i > j) std::swap(i, j);
  // Row-major upper triangle: row i starts after i*n - i(i-1)/2 entries.
  const auto ii = static_cast<std::size_t>(i);
  const auto n = static_cast<std::size_t>(order_);
  return ii * n - ii * (ii + 1) / 2 + ii + (static_cast<std::size_t>(j) - ii);
}

SymMatrix SymMatrix::identity(int order) {
  SymMatrix m(order);
  for (int i = 0; i < order; ++i) m.set(i, i, 1);
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<Vector>& rows) {
  const int p = static_cast<int>(rows.size());
  SymMatrix m(p);
  for (int i = 0; i < p; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != p) throw DimensionError("matrix is not square");
  }
  for (int i = 0; i < p; ++i) {
    for (int j = i; j < p; ++j) {
      const auto& a = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const auto& b = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (a != b) {
        throw InvariantError("matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
      m.set(i, j, a);
    }
  }
  return m;
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> full;
  for (const auto& r : rows) {
    Vector row;
    for (long v : r) row.emplace_back(v);
    full.push_back(std::move(row));
  }
  return from_rows(full);
}

SymMatrix SymMatrix::symmetric_outer(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("symmetric_outer: length mismatch");
  SymMatrix m(static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      m.set(static_cast<int>(i), static_cast<int>(j), a[i] * b[j] + b[i] * a[j]);
    }
  }
  return m;
}

SymMatrix SymMatrix::outer(const Vector& a) {
  SymMatrix m(static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) m.set(static_cast<int>(i), static_cast<int>(j), a[i] * a[j]);
  }
  return m;
}

std::vector<Vector> SymMatrix::rows() const {
  std::vector<Vector> out(static_cast<std::size_t>(order_), Vector(static_cast<std::size_t>(order_)));
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j);
  }
  return out;
}

Vector SymMatrix::apply(const Vector& v) const {
  if (static_cast<int>(v.size()) != order_) throw DimensionError("apply: length mismatch");
  Vector out(v.size(), Scalar(0));
  for (int i = 0; i < order_; ++i) {
    Scalar s = 0;
    for (int j = 0; j < order_; ++j) {
      const auto& vj = v[static_cast<std::size_t>(j)];
      if (vj != 0) s += (*this)(i, j) * vj;
    }
    out[static_cast<std::size_t>(i)] = std::move(s);
  }
  return out;
}

Scalar SymMatrix::quadratic(const Vector& v) const { return bilinear(v, v); }

Scalar SymMatrix::bilinear(const Vector& u, const Vector& v) const {
  if (static_cast<int>(u.size()) != order_) throw DimensionError("bilinear: length mismatch");
  return dot(u, apply(v));
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  if (order_ != other.order_) throw DimensionError("matrix order mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& other) {
  if (order_ != other.order_) throw DimensionError("matrix order mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(const Scalar& factor) {
  for (auto& v : data_) v *= factor;
  return *this;
}

std::string SymMatrix::to_string() const {
  std::string out = "[";
  for (int i = 0; i < order_; ++i) {
    if (i) out += ", ";
    out += "[";
    for (int j = 0; j < order_; ++j) {
      if (j) out += ", ";
      out += to_display((*this)(i, j));
    }
    out += "]";
  }
  return out + "]";
}

Scalar quad_form(const SymMatrix& d, const SimplexVector& t) {
  if (d.order() != t.order()) throw DimensionError("quad_form: order mismatch");
  return d.quadratic(t.coords());
}

Scalar matvec_row(const SymMatrix& d, const SimplexVector& t, int k) {
  if (d.order() != t.order()) throw DimensionError("matvec_row: order mismatch");
  if (k < 0 || k >= d.order()) throw DimensionError("matvec_row: row index out of range");
  Scalar s = 0;
  for (int j : t.support().indices()) s += d(k, j) * t[j];
  return s;
}

Scalar inner(const SymMatrix& a, const SymMatrix& b) {
  if (a.order() != b.order()) throw DimensionError("inner: order mismatch");
  Scalar s = 0;
  for (int i = 0; i < a.order(); ++i) {
    s += a(i, i) * b(i, i);
    for (int j = i + 1; j < a.order(); ++j) s += 2 * a(i, j) * b(i, j);
  }
  return s;
}

SymMatrix average(const std::vector<SymMatrix>& matrices) {
  if (matrices.empty()) throw InvariantError("average of an empty matrix list");
  SymMatrix sum(matrices.front().order());
  for (const auto& m : matrices) sum += m;
  return Scalar(1, static_cast<long>(matrices.size())) * std::move(sum);
}

}  // namespace copfaces
