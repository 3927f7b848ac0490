#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "copfaces/scalar.hpp"

namespace copfaces {

/// Dense row-major rational matrix for exact elimination. Small by design.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
  explicit RationalMatrix(const std::vector<Vector>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  [[nodiscard]] const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const Vector& row);
  [[nodiscard]] Vector row(std::size_t r) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  RationalMatrix reduced;            ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

RowEchelon reduced_row_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : M x = 0}, one vector per free column.
std::vector<Vector> nullspace_basis(const RationalMatrix& m);

/// Some solution of M x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve_particular(const RationalMatrix& m, const Vector& b);

}  // namespace copfaces
