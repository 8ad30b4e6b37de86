#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library; everything is brute force over mpq_class/mpz_class or plain ints.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Tuple = std::vector<std::int64_t>;

/// Admissible value of t (bottom-up, every consumed denominator > 0), or
/// nullopt. Empty tuples are rejected.
inline std::optional<mpq_class> evaluate(const Tuple& t) {
  if (t.empty()) return std::nullopt;
  mpq_class v(static_cast<long>(t.back()));
  for (std::size_t i = t.size() - 1; i-- > 0;) {
    if (sgn(v) <= 0) return std::nullopt;
    v = mpq_class(static_cast<long>(t[i])) - 1 / v;
    v.canonicalize();
  }
  return v;
}

inline bool is_zero_cf(const Tuple& t) {
  auto v = evaluate(t);
  return v && sgn(*v) == 0;
}

/// Calls f on every tuple of the given length with entries in [lo, hi].
inline void for_each_tuple(std::size_t len, std::int64_t lo, std::int64_t hi, const std::function<void(const Tuple&)>& f) {
  Tuple t(len, lo);
  for (;;) {
    f(t);
    std::size_t i = 0;
    while (i < len && t[i] == hi) t[i++] = lo;
    if (i == len) return;
    ++t[i];
  }
}

inline std::set<Tuple> zero_cf_by_filter(std::size_t k) {
  std::set<Tuple> out;
  for_each_tuple(k, 1, static_cast<std::int64_t>(k), [&](const Tuple& t) {
    if (is_zero_cf(t)) out.insert(t);
  });
  return out;
}

inline mpz_class catalan(unsigned long n) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
  return c / (n + 1);
}

/// Plain Euclid on p/q with ceiling quotients.
inline Tuple hj(long p, long q) {
  Tuple out;
  while (q != 0) {
    const long a = (p + q - 1) / q;
    out.push_back(a);
    const long r = a * q - p;
    p = q;
    q = r;
  }
  return out;
}

inline long inverse_mod(long a, long m) {
  for (long x = 1; x < m; ++x)
    if ((a * x) % m == 1) return x;
  return 0;
}

/// Rational Gaussian elimination; returns rank.
inline std::size_t rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Determinant by Laplace expansion along the first row.
inline mpz_class laplace_det(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    const mpz_class term = m[0][j] * laplace_det(minor);
    total += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

/// Tridiagonal matrix with diagonal t and off-diagonal -1 is PSD of rank
/// >= k-1: every principal minor is >= 0 and the rank is at least k-1.
inline bool tridiagonal_psd_corank_le_1(const Tuple& t) {
  const std::size_t k = t.size();
  std::vector<std::vector<mpz_class>> m(k, std::vector<mpz_class>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    m[i][i] = static_cast<long>(t[i]);
    if (i + 1 < k) m[i][i + 1] = m[i + 1][i] = -1;
  }
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    std::vector<std::vector<mpz_class>> sub;
    for (std::size_t a : idx) {
      std::vector<mpz_class> row;
      for (std::size_t b : idx) row.push_back(m[a][b]);
      sub.push_back(std::move(row));
    }
    if (laplace_det(sub) < 0) return false;
  }
  std::vector<std::vector<mpq_class>> q(k, std::vector<mpq_class>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) q[i][j] = m[i][j];
  return rank(q) + 1 >= k;
}

/// Pairs (m^2, m h - 1) with gcd(m, h) = 1, p <= pmax, 1 <= q < p.
inline std::set<std::pair<long, long>> rational_ball_pairs(long pmax) {
  std::set<std::pair<long, long>> out;
  for (long m = 2; m * m <= pmax; ++m)
    for (long h = 1; m * h - 1 < m * m; ++h)
      if (std::gcd(m, h) == 1) out.emplace(m * m, m * h - 1);
  return out;
}

/// Solves the rotation-number system r_{i-1} + r_{i+1} - n_i r_i = rhs_i
/// (rhs = (1, 0, ..., 0, -1), r_0 = r_{k+1} = 0) together with r_1 = 0 by
/// rational least-norm-free elimination; returns nullopt if inconsistent.
inline std::optional<std::vector<mpq_class>> rotation_system(const Tuple& n) {
  const std::size_t k = n.size();
  // Unknowns r_1..r_k; k+1 equations (k relations plus r_1 = 0).
  std::vector<std::vector<mpq_class>> a;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<mpq_class> row(k + 1, 0);
    if (i > 0) row[i - 1] = 1;
    if (i + 1 < k) row[i + 1] = 1;
    row[i] = -static_cast<long>(n[i]);
    row[k] = (i == 0 ? 1 : 0) + (i + 1 == k ? -1 : 0);
    a.push_back(row);
  }
  std::vector<mpq_class> pin(k + 1, 0);
  pin[0] = 1;
  a.push_back(pin);
  // Reduced row echelon form on the augmented matrix.
  std::size_t r = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t c = 0; c < k && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && sgn(a[piv][c]) == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const mpq_class lead = a[r][c];
    for (auto& x : a[r]) x /= lead;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = 0; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < a.size(); ++i)
    if (sgn(a[i][k]) != 0) return std::nullopt;
  if (r < k) return std::nullopt;  // not unique
  std::vector<mpq_class> sol(k);
  for (std::size_t i = 0; i < r; ++i) sol[pivcol[i]] = a[i][k];
  return sol;
}

}  // namespace oracle
