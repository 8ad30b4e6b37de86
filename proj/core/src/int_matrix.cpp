#include "lensfill/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lensfill {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::tridiagonal(const CFTuple& diag, long off) {
  const std::size_t n = diag.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = static_cast<long>(diag[i]);
    if (i + 1 < n) {
      m(i, i + 1) = off;
      m(i + 1, i) = off;
    }
  }
  return m;
}

const Integer& IntMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("IntMatrix index out of range");
  return (*this)(i, j);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Integer& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(l, j);
    }
  return c;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
}

// row_dst -= q * row_src
void sub_row(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a(src, j) != 0) a(dst, j) -= q * a(src, j);
}

// col_dst -= q * col_src
void sub_col(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a(i, src) != 0) a(i, dst) -= q * a(i, src);
}

}  // namespace

std::vector<Integer> smith_diagonal(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  const std::size_t n = std::min(r, c);
  std::vector<Integer> diag(n, Integer(0));

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Pivot on the smallest non-zero magnitude in the trailing block.
      std::size_t pi = r, pj = c;
      Integer best;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          const Integer& x = a(i, j);
          if (x == 0) continue;
          if (pi == r || cmpabs(x, best) < 0) {
            best = abs(x);
            pi = i;
            pj = j;
          }
        }
      if (pi == r) return diag;  // trailing block is zero
      swap_rows(a, t, pi);
      swap_cols(a, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        sub_row(a, i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        sub_col(a, j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            sub_row(a, t, i, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag[t] = abs(a(t, t));
  }
  return diag;
}

std::size_t rank(const IntMatrix& m) {
  auto d = smith_diagonal(m);
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](const Integer& x) { return x != 0; }));
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap_with = i;
          break;
        }
      if (swap_with == n) return 0;
      swap_rows(a, k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t c = a.cols();
  IntMatrix v = IntMatrix::identity(c);
  std::size_t piv = 0;

  for (std::size_t i = 0; i < a.rows() && piv < c; ++i) {
    for (;;) {
      std::size_t best = c;
      for (std::size_t j = piv; j < c; ++j)
        if (a(i, j) != 0 && (best == c || cmpabs(a(i, j), a(i, best)) < 0)) best = j;
      if (best == c) break;
      swap_cols(a, piv, best);
      swap_cols(v, piv, best);
      bool reduced = true;
      for (std::size_t j = piv + 1; j < c; ++j) {
        if (a(i, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, j).get_mpz_t(), a(i, piv).get_mpz_t());
        sub_col(a, j, piv, q);
        sub_col(v, j, piv, q);
        if (a(i, j) != 0) reduced = false;
      }
      if (reduced) {
        ++piv;
        break;
      }
    }
  }

  IntMatrix basis(c, c - piv);
  for (std::size_t j = piv; j < c; ++j)
    for (std::size_t i = 0; i < c; ++i) basis(i, j - piv) = v(i, j);
  return basis;
}

}  // namespace lensfill
