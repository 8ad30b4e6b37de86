#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "lensfill/exact_arith.hpp"

namespace lensfill {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& d);
  /// Symmetric tridiagonal matrix with the given diagonal and `off` on the
  /// two adjacent diagonals.
  static IntMatrix tridiagonal(const CFTuple& diag, long off);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Bounds-checked access; throws std::out_of_range.
  const Integer& at(std::size_t i, std::size_t j) const;

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string str() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Elementary divisors d_1 | d_2 | ... of the Smith normal form, zeros last;
/// min(rows, cols) entries, all non-negative.
std::vector<Integer> smith_diagonal(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// Columns of the result form a Z-basis of {x in Z^cols : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

}  // namespace lensfill
