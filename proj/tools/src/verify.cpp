#include "lensfill/cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <gmpxx.h>

#include "lensfill/cfrac.hpp"
#include "lensfill/errors.hpp"
#include "lensfill/fillings.hpp"
#include "lensfill/homology.hpp"
#include "lensfill/lattice.hpp"

namespace lensfill::cli {

namespace {

// Thrown inside a suite to stop at the first counterexample.
struct Counterexample {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Counterexample{what};
}

std::string pair_str(long p, long q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

template <class F>
void for_each_pair(long pmax, F f) {
  for (long p = 2; p <= pmax; ++p)
    for (long q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) f(p, q);
}

std::int64_t slack(const CFTuple& b, const CFTuple& n) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n.size(); ++i) s += b[i] - n[i];
  return s;
}

void suite_catalan(SuiteResult& r, std::optional<long>) {
  for (unsigned long k = 2; k <= 12; ++k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * (k - 1), k - 1);
    c /= k;
    const auto got = enumerate_zero_cf(k).size();
    require(mpz_class(static_cast<unsigned long>(got)) == c, "k=" + std::to_string(k) + ": " + std::to_string(got));
    ++r.checks;
  }
  r.scope = "|zero continued fractions of length k| = Catalan(k-1), k=2..12";
}

void suite_duality(SuiteResult& r, std::optional<long> pmax) {
  const long pm = pmax.value_or(300);
  for_each_pair(pm, [&](long p, long q) {
    const LensParams a = make_params(p, q);
    require(eval_cf(reverse(hj_expand(p, q))).value() == Rational(Integer(p), a.qbar), pair_str(p, q) + ": reversed expansion");
    require(dual_expansion(a.b) == dual_expansion_via_fraction(a.b), pair_str(p, q) + ": dual expansion routes differ");
    try {
      check_reversal_duality(p, q);
    } catch (const AssertionFailure& e) {
      throw Counterexample{e.what()};
    }
    ++r.checks;
  });
  r.scope = "Z(p,qbar) = reverse Z(p,q), p <= " + std::to_string(pm);
}

void suite_gamma(SuiteResult& r, std::optional<long> pmax) {
  const long pm = pmax.value_or(100);
  for_each_pair(pm, [&](long p, long q) {
    const CFTuple b = make_params(p, q).b;
    for (const SpinStructure& s : spin_structures(b)) {
      require(gamma_filling(b, s) == gamma_standard(b, s), pair_str(p, q) + " s=" + format_tuple(CFTuple(s.bits.begin(), s.bits.end())));
      ++r.checks;
    }
  });
  r.scope = "(p,q,s) with p <= " + std::to_string(pm);
}

void suite_rotation(SuiteResult& r, std::optional<long>) {
  for (std::size_t k = 2; k <= 10; ++k) {
    for (const CFTuple& n : enumerate_zero_cf(k)) {
      try {
        rotation_numbers(n);
      } catch (const AssertionFailure&) {
        throw Counterexample{format_tuple(n)};
      }
      ++r.checks;
    }
  }
  r.scope = "zero continued fractions of length 2..10";
}

void suite_lattice(SuiteResult& r, std::optional<long> pmax) {
  const long pm = pmax.value_or(60);
  for_each_pair(pm, [&](long p, long q) {
    const LensParams lp = make_params(p, q);
    for (const CFTuple& n : zset(lp)) {
      const std::string where = pair_str(p, q) + " n=" + format_tuple(n);
      try {
        const StringConfiguration cfg = build_string(lp.b, n);
        require(validate_hom_classes(cfg), where + ": class shape");
        require(validate_string_lemma(cfg), where + ": string lemma");
        require(complement_homology(cfg).b2 == invariants(lp, n).b2, where + ": b2");
        const std::vector<std::int64_t> s = minimal_si_counts(cfg);
        for (std::size_t i = 0; i < n.size(); ++i) require(lp.b[i] - s[i] == n[i], where + ": s_i recovery");
        require(orthogonal_minus_one_classes(cfg).empty(), where + ": orthogonal (-1)-class");
      } catch (const AssertionFailure& e) {
        throw Counterexample{where + ": " + e.what()};
      }
      ++r.checks;
    }
  });
  r.scope = "configurations for p <= " + std::to_string(pm);
}

void suite_mcduff(SuiteResult& r, std::optional<long> pmax) {
  const long pm = pmax.value_or(100);
  for (long p = 2; p <= pm; ++p) {
    const std::size_t got = classify(make_params(p, 1)).size();
    require(got == (p == 4 ? 2u : 1u), "p=" + std::to_string(p) + ": " + std::to_string(got) + " classes");
    ++r.checks;
  }
  r.scope = "L(p,1), p <= " + std::to_string(pm) + " (2 classes at p=4, else 1)";
}

void suite_corollary_c(SuiteResult& r, std::optional<long> pmax) {
  const long pm = pmax.value_or(500);
  std::set<std::pair<long, long>> balls;
  for (long m = 2; m * m <= pm; ++m)
    for (long h = 1; m * h - 1 < m * m; ++h)
      if (std::gcd(m, h) == 1) balls.emplace(m * m, m * h - 1);
  for_each_pair(pm, [&](long p, long q) {
    const LensParams lp = make_params(p, q);
    bool zero_b2 = false;
    for (const CFTuple& n : zset(lp)) zero_b2 = zero_b2 || slack(lp.b, n) == 1;
    const bool want = balls.count({p, q}) > 0;
    require(zero_b2 == want, pair_str(p, q));
    require(rational_ball_criterion(p, q).has_value() == want, pair_str(p, q) + ": criterion");
    ++r.checks;
  });
  r.scope = "b2 = 0 filling iff (m^2, mh-1), p <= " + std::to_string(pm);
}

void suite_uniqueness(SuiteResult& r, std::optional<long> pmax) {
  const long pm = pmax.value_or(300);
  for_each_pair(pm, [&](long p, long q) {
    try {
      if (uniqueness_predicate(p, q)) ++r.checks;
    } catch (const AssertionFailure& e) {
      throw Counterexample{e.what()};
    }
  });
  r.scope = "pairs with all p/q entries >= 5, p <= " + std::to_string(pm);
}

void suite_corollary_a(SuiteResult& r, std::optional<long> pmax) {
  const long pm = pmax.value_or(400);
  for_each_pair(pm, [&](long p, long q) {
    const LensParams lp = make_params(p, q);
    const auto k = static_cast<std::int64_t>(lp.b.size());
    for (std::int64_t rr = 0; rr <= k - 4; ++rr) {
      try {
        corollary_a_family(lp, rr);
        ++r.checks;
      } catch (const InputError& e) {
        if (e.code() != Errc::HypothesisViolated) throw;
        return;
      } catch (const AssertionFailure& e) {
        throw Counterexample{pair_str(p, q) + ": " + e.what()};
      }
    }
  });
  r.scope = "(pair, r) instances, p <= " + std::to_string(pm);
}

const std::map<std::string, std::function<void(SuiteResult&, std::optional<long>)>>& registry() {
  static const std::map<std::string, std::function<void(SuiteResult&, std::optional<long>)>> suites{
      {"catalan", suite_catalan},         {"duality", suite_duality},         {"gamma", suite_gamma},
      {"rotation", suite_rotation},       {"lattice", suite_lattice},         {"mcduff", suite_mcduff},
      {"corollary-a", suite_corollary_a}, {"corollary-c", suite_corollary_c}, {"uniqueness", suite_uniqueness},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"catalan", "duality", "gamma", "rotation", "lattice",
                                              "mcduff", "corollary-a", "corollary-c", "uniqueness"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::optional<long> pmax) {
  const auto& suites = registry();
  const auto it = suites.find(name);
  if (it == suites.end()) throw InputError(Errc::InvalidInput, "unknown suite '" + name + "'");
  SuiteResult r{name, 0, "", std::nullopt};
  try {
    it->second(r, pmax);
  } catch (const Counterexample& c) {
    r.counterexample = c.what;
  }
  return r;
}

}  // namespace lensfill::cli
