#include "lensfill/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lensfill/cfrac.hpp"
#include "lensfill/errors.hpp"

namespace lensfill {

Integer lattice_pair(const LatticeVector& x, const LatticeVector& y) {
  if (x.size() != y.size() || x.empty()) throw InputError(Errc::InvalidInput, "lattice vectors of different length");
  Integer s = x[0] * y[0];
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] != 0 && y[i] != 0) s -= x[i] * y[i];
  return s;
}

std::vector<Integer> StringConfiguration::target_type() const {
  std::vector<Integer> t{1};
  for (std::size_t i = 0; i < b.size(); ++i) t.emplace_back(static_cast<long>(i == 0 ? 1 - b[0] : -b[i]));
  return t;
}

bool string_invariants_hold(const StringConfiguration& cfg) {
  const std::vector<Integer> type = cfg.target_type();
  if (cfg.classes.size() != type.size()) return false;
  for (const LatticeVector& c : cfg.classes)
    if (c.size() != cfg.M + 1) return false;
  for (std::size_t i = 0; i < cfg.classes.size(); ++i) {
    for (std::size_t j = i; j < cfg.classes.size(); ++j) {
      const Integer v = lattice_pair(cfg.classes[i], cfg.classes[j]);
      const Integer want = i == j ? type[i] : Integer(j == i + 1 ? 1 : 0);
      if (v != want) return false;
    }
  }
  return true;
}

StringConfiguration build_string(const CFTuple& b, const CFTuple& n) {
  if (b.empty() || n.size() != b.size()) throw InputError(Errc::InvalidInput, "n and b must have the same positive length");
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] > b[i] || b[i] < 1) throw InputError(Errc::InvalidInput, format_tuple(n) + " exceeds " + format_tuple(b));
  const std::vector<std::size_t> path = strict_blowup_sequence(n);

  const std::size_t k = n.size();
  std::size_t extra = 0;
  for (std::size_t i = 0; i < k; ++i) extra += static_cast<std::size_t>(b[i] - n[i]);
  StringConfiguration cfg{b, n, (k - 1) + extra, {}};

  LatticeVector line(cfg.M + 1, 0);
  line[0] = 1;
  std::vector<LatticeVector> curves{line};
  CFTuple replay{0};
  std::size_t fresh = 1;
  for (std::size_t s : path) {
    const std::size_t f = fresh++;
    if (s >= 2) curves[s - 2][f] -= 1;
    if (s <= curves.size()) curves[s - 1][f] -= 1;
    LatticeVector e(cfg.M + 1, 0);
    e[f] = 1;
    curves.insert(curves.begin() + static_cast<std::ptrdiff_t>(s - 1), std::move(e));
    replay = blowup(replay, s);
  }
  if (replay != n) {
    throw AssertionFailure(Errc::ConsistencyViolated, "blowup path does not reproduce " + format_tuple(n));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::int64_t r = 0; r < b[i] - n[i]; ++r) curves[i][fresh++] -= 1;

  cfg.classes.push_back(std::move(line));
  for (LatticeVector& c : curves) cfg.classes.push_back(std::move(c));
  if (!string_invariants_hold(cfg)) {
    throw AssertionFailure(Errc::ConsistencyViolated, "string of type mismatch for n=" + format_tuple(n));
  }
  return cfg;
}

namespace {

struct Shape {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
  bool other = false;  // a coefficient outside {-1, 0, 1}
};

Shape shape_of(const LatticeVector& v) {
  Shape s;
  for (std::size_t j = 1; j < v.size(); ++j) {
    if (v[j] == 1) {
      s.plus.push_back(j);
    } else if (v[j] == -1) {
      s.minus.push_back(j);
    } else if (v[j] != 0) {
      s.other = true;
    }
  }
  return s;
}

}  // namespace

bool validate_hom_classes(const StringConfiguration& cfg) {
  const std::size_t k = cfg.b.size();
  if (cfg.classes.size() != k + 1) return false;
  for (const LatticeVector& c : cfg.classes)
    if (c.size() != cfg.M + 1) return false;
  const LatticeVector& c0 = cfg.classes[0];
  if (c0[0] != 1 || std::any_of(c0.begin() + 1, c0.end(), [](const Integer& x) { return x != 0; })) return false;

  for (std::size_t i = 1; i <= k; ++i) {
    const LatticeVector& c = cfg.classes[i];
    const Shape s = shape_of(c);
    const auto bi = static_cast<std::size_t>(cfg.b[i - 1]);
    if (s.other) return false;
    if (i == 1) {
      if (c[0] != 1 || !s.plus.empty() || s.minus.size() != bi) return false;
    } else {
      if (c[0] != 0 || s.plus.size() != 1 || s.minus.size() + 1 != bi) return false;
    }
    Integer adj = 0;
    for (std::size_t j = 1; j < c.size(); ++j) adj += c[j] + c[j] * c[j];
    if (adj != (i == 1 ? 0 : 2)) return false;
  }
  return true;
}

bool validate_string_lemma(const StringConfiguration& cfg) {
  const std::size_t k = cfg.b.size();
  if (k < 2) return true;
  // A[i] and lead[i] for i = 1..k (index 0 unused).
  std::vector<std::vector<std::size_t>> A(k + 1);
  std::vector<std::size_t> lead(k + 1, 0);
  for (std::size_t i = 1; i <= k; ++i) {
    const Shape s = shape_of(cfg.classes[i]);
    A[i] = s.minus;
    if (i >= 2) lead[i] = s.plus.at(0);
  }
  auto in = [](const std::vector<std::size_t>& set, std::size_t x) {
    return std::binary_search(set.begin(), set.end(), x);
  };

  for (std::size_t j = 2; j <= k; ++j) {
    bool found = false;
    for (std::size_t i = 1; i < j; ++i) {
      if (!in(A[i], lead[j])) continue;
      found = true;
      if (i + 1 < j) {
        bool witness = false;
        for (std::size_t h = i + 1; h < j && !witness; ++h) witness = in(A[i], lead[h]) && in(A[j], lead[h]);
        if (!witness) return false;
      }
    }
    if (!found) return false;
  }

  std::vector<std::size_t> leads(lead.begin() + 2, lead.end());
  std::sort(leads.begin(), leads.end());
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      for (std::size_t x : A[i])
        if (in(A[j], x) && !in(leads, x)) return false;
    }
  }
  return true;
}

namespace {

IntMatrix pairing_matrix(const StringConfiguration& cfg) {
  IntMatrix p(cfg.classes.size(), cfg.M + 1);
  for (std::size_t i = 0; i < cfg.classes.size(); ++i) {
    const LatticeVector& c = cfg.classes[i];
    p(i, 0) = c[0];
    for (std::size_t j = 1; j <= cfg.M; ++j)
      if (c[j] != 0) p(i, j) = -c[j];
  }
  return p;
}

// Gram matrix of the columns of `basis` under the lattice form, negated.
IntMatrix negated_gram(const IntMatrix& basis) {
  const std::size_t d = basis.cols();
  IntMatrix g(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t c = a; c < d; ++c) {
      Integer s = -basis(0, a) * basis(0, c);
      for (std::size_t i = 1; i < basis.rows(); ++i)
        if (basis(i, a) != 0 && basis(i, c) != 0) s += basis(i, a) * basis(i, c);
      g(a, c) = s;
      g(c, a) = s;
    }
  }
  return g;
}

LatticeVector apply_basis(const IntMatrix& basis, const std::vector<Integer>& x) {
  LatticeVector v(basis.rows(), 0);
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t i = 0; i < basis.rows(); ++i)
      if (basis(i, a) != 0) v[i] += basis(i, a) * x[a];
  }
  return v;
}

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

ComplementHomology complement_homology(const StringConfiguration& cfg) {
  const IntMatrix p = pairing_matrix(cfg);
  const std::size_t r = rank(p);
  ComplementHomology out;
  out.b2 = static_cast<std::int64_t>(cfg.M + 1 - r);

  auto fail = [&](const std::string& what) {
    return AssertionFailure(Errc::ConsistencyViolated, what + " for b=" + format_tuple(cfg.b) + ", n=" + format_tuple(cfg.source_n));
  };
  if (r != cfg.classes.size()) throw fail("pairing matrix is not of full rank");

  out.h1_order = 1;
  for (const Integer& d : smith_diagonal(p)) {
    out.h1_order *= d;
    if (d > 1) out.h1_divisors.push_back(d);
  }

  IntMatrix gram_string(cfg.classes.size(), cfg.classes.size());
  for (std::size_t i = 0; i < cfg.classes.size(); ++i)
    for (std::size_t j = 0; j < cfg.classes.size(); ++j) gram_string(i, j) = lattice_pair(cfg.classes[i], cfg.classes[j]);
  out.det_string = abs_int(determinant(gram_string));
  const IntMatrix kernel = kernel_basis(p);
  out.det_complement = kernel.cols() == 0 ? Integer(1) : abs_int(determinant(negated_gram(kernel)));

  std::int64_t expected_b2 = -1;
  for (std::size_t i = 0; i < cfg.b.size(); ++i) expected_b2 += cfg.b[i] - cfg.source_n[i];
  if (out.b2 != expected_b2) throw fail("b2 = " + std::to_string(out.b2) + ", expected " + std::to_string(expected_b2));
  const Integer lens_order = continuant(cfg.b);
  if (out.det_string != lens_order) throw fail("|det| of the string is " + out.det_string.get_str());
  if (out.det_complement * out.h1_order * out.h1_order != lens_order) throw fail("complement determinant and H_1 disagree with p");
  return out;
}

std::vector<std::vector<Integer>> enumerate_norm_vectors(const IntMatrix& gram, const Integer& norm) {
  const std::size_t n = gram.rows();
  if (gram.cols() != n) throw InputError(Errc::InvalidInput, "Gram matrix must be square");
  if (n == 0) return norm == 0 ? std::vector<std::vector<Integer>>{{}} : std::vector<std::vector<Integer>>{};

  // G = U^T D U with U unit upper triangular: Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2.
  std::vector<mpq_class> d(n);
  std::vector<std::vector<mpq_class>> u(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class di(gram(i, i));
    for (std::size_t m = 0; m < i; ++m)
      if (sgn(u[m][i]) != 0) di -= d[m] * u[m][i] * u[m][i];
    if (sgn(di) <= 0) throw InputError(Errc::InvalidInput, "Gram matrix is not positive definite");
    d[i] = di;
    u[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      mpq_class v(gram(i, j));
      for (std::size_t m = 0; m < i; ++m)
        if (sgn(u[m][i]) != 0 && sgn(u[m][j]) != 0) v -= d[m] * u[m][i] * u[m][j];
      if (sgn(v) != 0) u[i][j] = v / di;
    }
  }

  // (G^{-1})_ii = sum_j (U^{-1})_ij^2 / d_j.
  std::vector<std::vector<mpq_class>> w(n, std::vector<mpq_class>(n));
  for (std::size_t i = n; i-- > 0;) {
    w[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      mpq_class s;
      for (std::size_t m = i + 1; m <= j; ++m)
        if (sgn(u[i][m]) != 0 && sgn(w[m][j]) != 0) s -= u[i][m] * w[m][j];
      w[i][j] = s;
    }
  }
  std::vector<mpq_class> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class s;
    for (std::size_t j = i; j < n; ++j)
      if (sgn(w[i][j]) != 0) s += w[i][j] * w[i][j] / d[j];
    bound[i] = s * mpq_class(norm);
  }

  std::vector<std::vector<std::pair<std::size_t, mpq_class>>> row(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sgn(u[i][j]) != 0) row[i].emplace_back(j, u[i][j]);

  std::vector<std::vector<Integer>> hits;
  std::vector<Integer> x(n, 0);
  auto recurse = [&](auto&& self, std::size_t i, const mpq_class& remaining) -> void {
    mpq_class c;
    for (const auto& [j, v] : row[i])
      if (x[j] != 0) c += v * mpq_class(x[j]);
    // Integers x with d_i (x + c)^2 <= remaining.
    mpq_class ratio = remaining / d[i];
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    const Integer radius = sqrt(fl) + 1;
    mpq_class negc = -c;
    Integer centre;
    mpz_fdiv_q(centre.get_mpz_t(), negc.get_num_mpz_t(), negc.get_den_mpz_t());
    for (Integer v = centre - radius; v <= centre + radius + 1; ++v) {
      const mpq_class t = mpq_class(v) + c;
      const mpq_class left = remaining - d[i] * t * t;
      if (sgn(left) < 0) continue;
      x[i] = v;
      if (i == 0) {
        if (sgn(left) == 0) hits.push_back(x);
      } else {
        self(self, i - 1, left);
      }
    }
    x[i] = 0;
  };
  recurse(recurse, n - 1, mpq_class(norm));

  for (const std::vector<Integer>& h : hits) {
    for (std::size_t i = 0; i < n; ++i) {
      if (mpq_class(h[i] * h[i]) > bound[i]) {
        throw AssertionFailure(Errc::EnumerationBoundViolated, "coordinate exceeds the inverse-Gram bound");
      }
    }
  }
  return hits;
}

MinusOneCensus minus_one_census(const StringConfiguration& cfg) {
  const std::size_t k = cfg.b.size();
  IntMatrix row(1, cfg.M + 1);
  for (std::size_t j = 0; j <= cfg.M; ++j) row(0, j) = j == 0 ? cfg.classes[0][0] : Integer(-cfg.classes[0][j]);
  const IntMatrix basis = kernel_basis(row);

  MinusOneCensus census;
  census.per_curve.resize(k);
  for (const std::vector<Integer>& x : enumerate_norm_vectors(negated_gram(basis), Integer(1))) {
    LatticeVector e = apply_basis(basis, x);
    std::size_t touched = 0;
    std::size_t which = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (lattice_pair(e, cfg.classes[i]) != 0) {
        ++touched;
        which = i;
      }
    }
    if (touched == 0) {
      census.orthogonal.push_back(std::move(e));
    } else if (touched == 1) {
      census.per_curve[which - 1].push_back(std::move(e));
    }
  }
  return census;
}

std::vector<std::int64_t> minimal_si_counts(const StringConfiguration& cfg) {
  const MinusOneCensus census = minus_one_census(cfg);
  std::vector<std::int64_t> s;
  for (std::size_t i = 0; i < census.per_curve.size(); ++i) {
    const std::size_t size = census.per_curve[i].size();
    if (size % 2 != 0) throw AssertionFailure(Errc::ConsistencyViolated, "S_i is not closed under negation");
    s.push_back(static_cast<std::int64_t>(size / 2));
    if (cfg.b[i] - s.back() != cfg.source_n[i]) {
      throw AssertionFailure(Errc::ConsistencyViolated,
                             "b - s does not recover n=" + format_tuple(cfg.source_n) + " at position " + std::to_string(i + 1));
    }
  }
  return s;
}

std::vector<LatticeVector> orthogonal_minus_one_classes(const StringConfiguration& cfg) {
  const IntMatrix basis = kernel_basis(pairing_matrix(cfg));
  std::vector<LatticeVector> out;
  for (const std::vector<Integer>& x : enumerate_norm_vectors(negated_gram(basis), Integer(1))) out.push_back(apply_basis(basis, x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lensfill
