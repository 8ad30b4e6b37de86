#include <gtest/gtest.h>

#include <random>

#include "lensfill/cfrac.hpp"
#include "lensfill/errors.hpp"
#include "lensfill/exact_arith.hpp"
#include "lensfill/int_matrix.hpp"
#include "oracles.hpp"

using namespace lensfill;

TEST(Rational, NormalisesOnConstruction) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(Integer(0), Integer(-7)), Rational(0));
  EXPECT_THROW(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST(Rational, Arithmetic) {
  const Rational a(Integer(1), Integer(3));
  const Rational b(Integer(1), Integer(6));
  EXPECT_EQ(a + b, Rational(Integer(1), Integer(2)));
  EXPECT_EQ(a - b, b);
  EXPECT_EQ(a * b, Rational(Integer(1), Integer(18)));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(Integer(-1), Integer(3)));
  EXPECT_EQ(a.inverse(), Rational(3));
  EXPECT_LT(b, a);
  EXPECT_EQ(Rational(Integer(-9), Integer(2)).str(), "-9/2");
  EXPECT_EQ(Rational(4).str(), "4");
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(ModInverse, Examples) {
  EXPECT_EQ(mod_inverse(1, 7), 1);
  EXPECT_EQ(mod_inverse(2, 9), 5);
  EXPECT_EQ(mod_inverse(2, 5), 3);
  EXPECT_EQ(mod_inverse(-1, 5), 4);
}

TEST(ModInverse, Errors) {
  try {
    mod_inverse(6, 9);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.code(), Errc::NotInvertible);
  }
  EXPECT_THROW(mod_inverse(1, 1), InputError);
}

TEST(ModInverse, MatchesExhaustiveScanAndIsAnInvolution) {
  for (long m = 2; m <= 120; ++m) {
    for (long a = 0; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      const Integer x = mod_inverse(a, m);
      EXPECT_EQ(x, oracle::inverse_mod(a, m)) << a << " mod " << m;
      EXPECT_EQ(mod_inverse(x, m), a) << a << " mod " << m;
    }
  }
}

TEST(Continuant, Examples) {
  EXPECT_EQ(continuant({2, 2, 2}), 4);
  EXPECT_EQ(continuant({}), 1);
  EXPECT_EQ(continuant({5, 2}), 9);
  EXPECT_EQ(continuant({7}), 7);
}

TEST(Continuant, IsNumeratorAndTailIsDenominator) {
  oracle::for_each_tuple(4, 1, 5, [](const oracle::Tuple& t) {
    const auto v = oracle::evaluate(t);
    if (!v || sgn(*v) <= 0) return;
    const CFTuple tail(t.begin() + 1, t.end());
    EXPECT_EQ(continuant(t), v->get_num());
    EXPECT_EQ(continuant(tail), v->get_den());
  });
}

TEST(Smith, Examples) {
  EXPECT_EQ(smith_diagonal(IntMatrix::identity(2)), (std::vector<Integer>{1, 1}));
  EXPECT_EQ(smith_diagonal(IntMatrix::diagonal({2, 4})), (std::vector<Integer>{2, 4}));
  EXPECT_EQ(smith_diagonal(IntMatrix::tridiagonal({2, 2, 2}, -1)), (std::vector<Integer>{1, 1, 4}));
  EXPECT_EQ(smith_diagonal(IntMatrix::diagonal({4, 6})), (std::vector<Integer>{2, 12}));
  EXPECT_EQ(smith_diagonal(IntMatrix{{0, 0}, {0, 0}}), (std::vector<Integer>{0, 0}));
  EXPECT_EQ(smith_diagonal(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), (std::vector<Integer>{2, 6, 12}));
}

TEST(Smith, RandomMatricesAgainstOracles) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 400; ++trial) {
    const int r = dim(rng);
    const int c = dim(rng);
    IntMatrix m(r, c);
    std::vector<std::vector<mpq_class>> q(r, std::vector<mpq_class>(c));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        const int v = trial % 5 == 0 && j == 0 ? 0 : entry(rng);
        m(i, j) = v;
        q[i][j] = v;
      }
    const std::vector<Integer> d = smith_diagonal(m);
    ASSERT_EQ(d.size(), static_cast<std::size_t>(std::min(r, c)));
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      EXPECT_GE(d[i], 0);
      if (d[i] != 0) ++nonzero;
      if (i + 1 < d.size() && d[i] != 0) EXPECT_EQ(d[i + 1] % d[i], 0) << m.str();
      if (i + 1 < d.size() && d[i] == 0) EXPECT_EQ(d[i + 1], 0);
    }
    EXPECT_EQ(nonzero, oracle::rank(q));
    EXPECT_EQ(rank(m), oracle::rank(q));

    // Kernel: columns annihilated by m, and as many as the nullity.
    const IntMatrix k = kernel_basis(m);
    EXPECT_EQ(k.cols(), static_cast<std::size_t>(c) - oracle::rank(q));
    const IntMatrix prod = m * k;
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) EXPECT_EQ(prod(i, j), 0);

    if (r == c) {
      std::vector<std::vector<mpz_class>> z(r, std::vector<mpz_class>(r));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) z[i][j] = m(i, j);
      const Integer det = oracle::laplace_det(z);
      EXPECT_EQ(determinant(m), det) << m.str();
      Integer prod_d = 1;
      for (const Integer& x : d) prod_d *= x;
      EXPECT_EQ(prod_d, abs(det));
    }
  }
}

TEST(Kernel, BasisIsSaturated) {
  // The kernel of (2 4) is spanned by (-2, 1); (-4, 2) alone would not be a basis.
  const IntMatrix k = kernel_basis(IntMatrix{{2, 4}});
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(abs(k(0, 0)), 2);
  EXPECT_EQ(abs(k(1, 0)), 1);
}

TEST(IntMatrix, BasicOps) {
  const IntMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(a.transpose(), (IntMatrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(a * IntMatrix::identity(2), a);
  EXPECT_EQ(determinant(a), -2);
  EXPECT_THROW(a.at(2, 0), std::out_of_range);
  EXPECT_EQ(determinant(IntMatrix::tridiagonal({2, 2, 2, 3}, -1)), 9);
}
