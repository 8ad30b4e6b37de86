#include <gtest/gtest.h>

#include <numeric>

#include "lensfill/cfrac.hpp"
#include "lensfill/errors.hpp"
#include "oracles.hpp"

using namespace lensfill;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no InputError thrown";
  return Errc::InvalidInput;
}

}  // namespace

TEST(HjExpand, Examples) {
  EXPECT_EQ(hj_expand(4, 3), (CFTuple{2, 2, 2}));
  EXPECT_EQ(hj_expand(9, 2), (CFTuple{5, 2}));
  EXPECT_EQ(hj_expand(26, 5), (CFTuple{6, 2, 2, 2, 2}));
  for (long p = 2; p <= 50; ++p) EXPECT_EQ(hj_expand(p, p - 1), CFTuple(static_cast<std::size_t>(p - 1), 2));
}

TEST(HjExpand, RejectsInvalidPairs) {
  EXPECT_EQ(code_of([] { hj_expand(6, 4); }), Errc::InvalidPair);
  EXPECT_EQ(code_of([] { hj_expand(3, 3); }), Errc::InvalidPair);
  EXPECT_EQ(code_of([] { hj_expand(3, 0); }), Errc::InvalidPair);
}

TEST(HjExpand, RoundTripsAndMatchesEuclid) {
  for (long p = 2; p <= 2000; ++p) {
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const CFTuple t = hj_expand(p, q);
      ASSERT_EQ(eval_cf(t).value(), Rational(Integer(p), Integer(q)));
      if (p <= 300) ASSERT_EQ(t, oracle::hj(p, q));
    }
  }
}

TEST(HjExpand, HugeIntegersDoNotOverflow) {
  Integer f1 = 1, f2 = 1;
  for (int i = 0; i < 200; ++i) {
    Integer f3 = f1 + f2;
    f1 = f2;
    f2 = f3;
  }
  const CFTuple t = hj_expand(f2, f1);
  EXPECT_EQ(eval_cf(t).value(), Rational(f2, f1));
  EXPECT_THROW(hj_expand(f2 * f2, 1), std::overflow_error);
}

TEST(EvalCf, Examples) {
  EXPECT_EQ(eval_cf({1, 1}).value(), Rational(0));
  EXPECT_EQ(eval_cf({2, 1, 2}).value(), Rational(0));
  const CFValue bad = eval_cf({1, 0, 1});
  EXPECT_FALSE(bad.is_admissible());
  EXPECT_EQ(bad.position(), 2u);
  EXPECT_EQ(eval_cf({0}).value(), Rational(0));
  EXPECT_EQ(eval_cf({7}).value(), Rational(7));
  EXPECT_EQ(eval_cf({2, 2, 2}).value(), Rational(Integer(4), Integer(3)));
  EXPECT_EQ(eval_cf({1, 1, 1}), CFValue::inadmissible(2));
  EXPECT_EQ(eval_cf({3, 0}), CFValue::inadmissible(2));
}

TEST(EvalCf, EmptyTupleHasNoValue) {
  const CFValue v = eval_cf({});
  EXPECT_TRUE(v.is_admissible());
  EXPECT_FALSE(v.has_value());
  EXPECT_THROW(v.value(), std::logic_error);
  EXPECT_THROW(v.position(), std::logic_error);
}

TEST(EvalCf, AgreesWithRationalOracle) {
  for (std::size_t len = 1; len <= 5; ++len) {
    oracle::for_each_tuple(len, 0, 4, [](const oracle::Tuple& t) {
      const auto want = oracle::evaluate(t);
      const CFValue got = eval_cf(t);
      ASSERT_EQ(got.is_admissible(), want.has_value()) << format_tuple(t);
      if (want) {
        EXPECT_EQ(got.value().numerator(), want->get_num());
        EXPECT_EQ(got.value().denominator(), want->get_den());
      }
    });
  }
}

TEST(AdmissibleMatrix, Examples) {
  EXPECT_TRUE(is_admissible_matrix({1, 1}));
  EXPECT_FALSE(is_admissible_matrix({1, 1, 1}));
  EXPECT_TRUE(is_admissible_matrix({2, 2}));
  EXPECT_EQ(code_of([] { is_admissible_matrix({1, 0}); }), Errc::InvalidInput);
}

// The literal definition only constrains denominators, so [1,1,2] is
// admissible with value -1, yet its matrix has determinant -1.
TEST(AdmissibleMatrix, LiteralDefinitionAdmitsNegativeValues) {
  EXPECT_TRUE(eval_cf({1, 1, 2}).is_admissible());
  EXPECT_EQ(eval_cf({1, 1, 2}).value(), Rational(-1));
  EXPECT_FALSE(is_admissible_matrix({1, 1, 2}));
  EXPECT_FALSE(eval_cf({2, 1, 1}).is_admissible());
}

TEST(AdmissibleMatrix, ExhaustiveAgainstPrincipalMinors) {
  for (std::size_t len = 1; len <= 8; ++len) {
    const std::int64_t hi = len <= 6 ? 6 : 4;
    oracle::for_each_tuple(len, 1, hi, [](const oracle::Tuple& t) {
      const bool got = is_admissible_matrix(t);
      const CFValue v = eval_cf(t);
      const bool nonnegative = v.is_admissible() && v.value().sign() >= 0;
      ASSERT_EQ(got, nonnegative) << format_tuple(t);
      if (t.size() <= 6) ASSERT_EQ(got, oracle::tridiagonal_psd_corank_le_1(t)) << format_tuple(t);
    });
  }
}

TEST(Blowdown, Examples) {
  EXPECT_EQ(blowdown({1, 2, 1}, 3), (CFTuple{1, 1}));
  EXPECT_EQ(blowdown({2, 1, 2}, 2), (CFTuple{1, 1}));
  EXPECT_EQ(blowdown({1, 1}, 1), (CFTuple{0}));
}

TEST(Blowdown, Errors) {
  EXPECT_EQ(code_of([] { blowdown({2, 2, 1}, 1); }), Errc::NotBlowdownable);
  EXPECT_EQ(code_of([] { blowdown({0, 1, 2}, 2); }), Errc::NotBlowdownable);
  EXPECT_EQ(code_of([] { blowdown({1}, 1); }), Errc::InvalidInput);
  EXPECT_EQ(code_of([] { blowdown({1, 1}, 3); }), Errc::InvalidInput);
}

TEST(Blowup, Examples) {
  EXPECT_EQ(blowup({1, 1}, 2), (CFTuple{2, 1, 2}));
  EXPECT_EQ(blowup({1, 1}, 3), (CFTuple{1, 2, 1}));
  EXPECT_EQ(blowup({0}, 2), (CFTuple{1, 1}));
  EXPECT_EQ(blowup({0}, 1), (CFTuple{1, 1}));
  EXPECT_EQ(code_of([] { blowup({1, 1}, 4); }), Errc::InvalidInput);
  EXPECT_EQ(code_of([] { blowup({1, 1}, 0); }), Errc::InvalidInput);
}

TEST(Blowup, InverseOfBlowdownAndPreservesZero) {
  for (std::size_t k = 1; k <= 10; ++k) {
    for (const CFTuple& t : enumerate_zero_cf(k)) {
      for (std::size_t s = 1; s <= k + 1; ++s) {
        const CFTuple up = blowup(t, s);
        ASSERT_TRUE(oracle::is_zero_cf(up)) << format_tuple(up);
        ASSERT_EQ(blowdown(up, s), t);
      }
      for (std::size_t s = 1; s <= k && k >= 2; ++s) {
        if (t[s - 1] != 1) continue;
        const CFTuple down = blowdown(t, s);
        ASSERT_TRUE(oracle::is_zero_cf(down)) << format_tuple(down);
        ASSERT_EQ(blowup(down, s), t);
      }
    }
  }
}

TEST(ZeroCf, SmallCases) {
  EXPECT_EQ(enumerate_zero_cf(1), (std::set<CFTuple>{{0}}));
  EXPECT_EQ(enumerate_zero_cf(2), (std::set<CFTuple>{{1, 1}}));
  EXPECT_EQ(enumerate_zero_cf(3), (std::set<CFTuple>{{1, 2, 1}, {2, 1, 2}}));
  EXPECT_EQ(enumerate_zero_cf(4).size(), 5u);
  EXPECT_THROW(enumerate_zero_cf(0), InputError);
}

TEST(ZeroCf, CatalanCounts) {
  for (unsigned long k = 2; k <= 12; ++k) {
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(enumerate_zero_cf(k).size())), oracle::catalan(k - 1)) << k;
  }
}

TEST(ZeroCf, MatchesBruteForceFilter) {
  for (std::size_t k = 2; k <= 7; ++k) EXPECT_EQ(enumerate_zero_cf(k), oracle::zero_cf_by_filter(k)) << k;
}

// No admissible zero continued fraction of length >= 2 has a zero entry.
TEST(ZeroCf, NoZeroEntriesBeyondLengthOne) {
  for (std::size_t k = 2; k <= 7; ++k) {
    oracle::for_each_tuple(k, 0, static_cast<std::int64_t>(k), [](const oracle::Tuple& t) {
      if (std::find(t.begin(), t.end(), 0) == t.end()) return;
      ASSERT_FALSE(oracle::is_zero_cf(t)) << format_tuple(t);
    });
  }
}

TEST(ZeroCf, EntrySumRange) {
  for (std::size_t k = 2; k <= 10; ++k) {
    const auto lo = static_cast<std::int64_t>(2 * k - 2);
    const auto hi = static_cast<std::int64_t>(3 * k - 4);
    for (const CFTuple& t : enumerate_zero_cf(k)) {
      const std::int64_t s = std::accumulate(t.begin(), t.end(), std::int64_t{0});
      ASSERT_GE(s, lo);
      ASSERT_LE(s, std::max(lo, hi));
    }
  }
}

TEST(StrictBlowupSequence, ReplaysToTheTuple) {
  EXPECT_EQ(strict_blowup_sequence({0}), std::vector<std::size_t>{});
  EXPECT_EQ(strict_blowup_sequence({1, 2, 1}), (std::vector<std::size_t>{2, 3}));
  for (std::size_t k = 1; k <= 9; ++k) {
    for (const CFTuple& t : enumerate_zero_cf(k)) {
      CFTuple cur{0};
      for (std::size_t s : strict_blowup_sequence(t)) {
        ASSERT_GE(s, 2u);
        cur = blowup(cur, s);
      }
      ASSERT_EQ(cur, t);
    }
  }
  EXPECT_THROW(strict_blowup_sequence({1, 1, 1}), InputError);
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual_expansion({2, 2, 2}), (CFTuple{4}));
  EXPECT_EQ(dual_expansion({2, 2, 2, 3}), (CFTuple{5, 2}));
  EXPECT_EQ(dual_expansion({7}), CFTuple(6, 2));
  EXPECT_EQ(dual_expansion_via_fraction({2, 2, 2, 3}), (CFTuple{5, 2}));
  EXPECT_EQ(code_of([] { dual_expansion({2, 1}); }), Errc::InvalidInput);
  EXPECT_EQ(code_of([] { dual_expansion_via_fraction({}); }), Errc::InvalidInput);
}

TEST(Dual, PointDiagramMatchesFractionRouteAndSumRule) {
  for (long p = 2; p <= 500; ++p) {
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const CFTuple b = oracle::hj(p, p - q);
      const CFTuple a = dual_expansion(b);
      ASSERT_EQ(a, dual_expansion_via_fraction(b));
      ASSERT_EQ(a, oracle::hj(p, q));
      std::int64_t sa = 0, sb = 0;
      for (auto x : a) sa += x - 1;
      for (auto x : b) sb += x - 1;
      ASSERT_EQ(sa, sb);
      ASSERT_EQ(sa, static_cast<std::int64_t>(a.size() + b.size()) - 1);
    }
  }
}

TEST(Reverse, ExamplesAndDuality) {
  EXPECT_EQ(reverse({5, 2}), (CFTuple{2, 5}));
  EXPECT_EQ(reverse({1, 2, 1}), (CFTuple{1, 2, 1}));
  for (std::size_t k = 1; k <= 8; ++k)
    for (const CFTuple& t : enumerate_zero_cf(k)) EXPECT_TRUE(oracle::is_zero_cf(reverse(t)));
  for (long p = 2; p <= 500; ++p) {
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const long qbar = oracle::inverse_mod(q, p);
      ASSERT_EQ(eval_cf(reverse(hj_expand(p, q))).value(), Rational(Integer(p), Integer(qbar)));
    }
  }
}
