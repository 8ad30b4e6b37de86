#include "lensfill/fillings.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lensfill/cfrac.hpp"
#include "lensfill/errors.hpp"

namespace lensfill {

LensParams make_params(const Integer& p, const Integer& q) {
  if (!(p > q && q >= 1) || gcd(p, q) != 1) {
    throw InputError(Errc::InvalidPair, "need coprime p > q >= 1, got (" + p.get_str() + "," + q.get_str() + ")");
  }
  return LensParams{p, q, hj_expand(p, p - q), mod_inverse(q, p)};
}

namespace {

// Depth-first search over the forward recursion of a zero continued
// fraction: x_1 = 0, x_{i+1} = 1/(n_i - x_i) > 0, and n_k = x_k. The state
// x_i = a/c is kept in lowest terms. Zero continued fractions of length k
// have sum(n) >= 2k - 2, which bounds the total slack sum(b - n).
class ZSearch {
public:
  explicit ZSearch(const CFTuple& b) : b_(b), n_(b.size(), 0) {
    const std::int64_t total = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    budget_ = total - 2 * (static_cast<std::int64_t>(b.size()) - 1);
  }

  std::vector<CFTuple> run() {
    if (budget_ >= 0) visit(0, Integer(0), Integer(1), budget_);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

private:
  void visit(std::size_t i, const Integer& a, const Integer& c, std::int64_t budget) {
    const std::size_t k = b_.size();
    if (i + 1 == k) {
      if (c != 1 || a > b_[i]) return;
      if (k > 1 && a < 1) return;
      n_[i] = a.get_si();
      out_.push_back(n_);
      return;
    }
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    const std::int64_t lo_value = fl.get_si() + 1;
    const std::int64_t lo = std::max(lo_value, b_[i] - budget);
    for (std::int64_t v = b_[i]; v >= lo; --v) {
      n_[i] = v;
      Integer den = Integer(static_cast<long>(v)) * c - a;
      visit(i + 1, c, den, budget - (b_[i] - v));
    }
  }

  const CFTuple& b_;
  CFTuple n_;
  std::int64_t budget_ = 0;
  std::vector<CFTuple> out_;
};

}  // namespace

std::vector<CFTuple> zset(const LensParams& params) { return ZSearch(params.b).run(); }

bool is_member(const LensParams& params, const CFTuple& n) {
  if (n.size() != params.b.size()) return false;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] < 0 || n[i] > params.b[i]) return false;
  return is_zero_cf(n);
}

FillingDescriptor invariants(const LensParams& params, const CFTuple& n) {
  if (!is_member(params, n)) {
    throw InputError(Errc::NotAFilling, format_tuple(n) + " is not in Z_{" + params.p.get_str() + "," + params.q.get_str() + "}");
  }
  FillingDescriptor d{params, n, 0, 0, {}};
  for (std::size_t i = 0; i < n.size(); ++i) d.handle_counts.push_back(params.b[i] - n[i]);
  d.chi = std::accumulate(d.handle_counts.begin(), d.handle_counts.end(), std::int64_t{0});
  d.b2 = d.chi - 1;
  return d;
}

std::vector<FillingClass> classify(const LensParams& params) {
  const bool involution = mod_floor(params.q * params.q, params.p) == 1;
  const std::vector<CFTuple> z = zset(params);
  std::vector<FillingClass> classes;
  std::vector<bool> used(z.size(), false);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    FillingClass cls;
    cls.representatives.push_back(invariants(params, z[i]));
    if (involution) {
      const CFTuple r = reverse(z[i]);
      auto it = std::lower_bound(z.begin(), z.end(), r);
      if (it == z.end() || *it != r) {
        throw AssertionFailure(Errc::TheoremViolation, "reverse of " + format_tuple(z[i]) + " missing from Z although q^2 = 1");
      }
      const auto j = static_cast<std::size_t>(it - z.begin());
      if (!used[j]) {
        used[j] = true;
        cls.representatives.push_back(invariants(params, r));
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

CFTuple corollary_a_family(const LensParams& params, std::int64_t r) {
  const CFTuple& b = params.b;
  const auto k = static_cast<std::int64_t>(b.size());
  if (k < 4) throw InputError(Errc::HypothesisViolated, "need k >= 4");
  if (r < 0 || r > k - 4) throw InputError(Errc::HypothesisViolated, "need 0 <= r <= k-4, got r=" + std::to_string(r));
  for (std::int64_t i = 1; i <= k - 3; ++i)
    if (b[static_cast<std::size_t>(i)] < 3) throw InputError(Errc::HypothesisViolated, "need b_2..b_{k-2} >= 3 in " + format_tuple(b));
  if (b.back() < k - 2) throw InputError(Errc::HypothesisViolated, "need b_k >= k-2 in " + format_tuple(b));

  CFTuple n{1};
  n.insert(n.end(), static_cast<std::size_t>(r), 2);
  n.push_back(3);
  n.insert(n.end(), static_cast<std::size_t>(k - 4 - r), 2);
  n.push_back(1);
  n.push_back(k - 2 - r);

  if (!is_member(params, n)) {
    throw AssertionFailure(Errc::TheoremViolation, format_tuple(n) + " is not in Z for b=" + format_tuple(b));
  }
  std::int64_t expected = 5 + r;
  for (std::int64_t x : b) expected += x - 3;
  if (invariants(params, n).chi != expected) {
    throw AssertionFailure(Errc::TheoremViolation, "Euler characteristic mismatch for " + format_tuple(n));
  }
  return n;
}

MN unique_one_value(const CFTuple& n) {
  if (n.size() < 3 || std::any_of(n.begin(), n.end(), [](std::int64_t x) { return x < 1; }) || !is_zero_cf(n)) {
    throw InputError(Errc::PreconditionViolated, format_tuple(n) + " is not a positive zero continued fraction of length >= 3");
  }
  if (std::count(n.begin(), n.end(), 1) != 1) {
    throw InputError(Errc::PreconditionViolated, format_tuple(n) + " does not have exactly one entry equal to 1");
  }
  CFTuple t = n;
  *std::find(t.begin(), t.end(), 1) = 2;
  const CFValue v = eval_cf(t);
  auto fail = [&] {
    return AssertionFailure(Errc::TheoremViolation, "value of " + format_tuple(t) + " is not of the form m^2/(m n + 1)");
  };
  if (!v.is_admissible() || v.value().sign() <= 0) throw fail();
  const Integer& num = v.value().numerator();
  const Integer& den = v.value().denominator();
  Integer m = sqrt(num);
  if (m * m != num) throw fail();
  const Integer rest = den - 1;
  if (rest % m != 0) throw fail();
  Integer nn = rest / m;
  if (gcd(m, nn) != 1) throw fail();
  return MN{std::move(m), std::move(nn)};
}

std::optional<RationalBallWitness> rational_ball_criterion(const Integer& p, const Integer& q) {
  make_params(p, q);
  const Integer m = sqrt(p);
  if (m * m != p) return std::nullopt;
  const Integer next = q + 1;
  if (next % m != 0) return std::nullopt;
  Integer h = next / m;
  if (gcd(m, h) != 1) return std::nullopt;
  return RationalBallWitness{m, std::move(h)};
}

bool uniqueness_predicate(const Integer& p, const Integer& q) {
  const CFTuple a = hj_expand(p, q);
  const bool holds = std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x >= 5; });
  if (holds) {
    const LensParams params = make_params(p, q);
    CFTuple canonical(params.b.size(), 2);
    canonical.front() = 1;
    canonical.back() = 1;
    if (zset(params) != std::vector<CFTuple>{canonical}) {
      throw AssertionFailure(Errc::TheoremViolation,
                             "Z_{" + p.get_str() + "," + q.get_str() + "} is not {" + format_tuple(canonical) + "}");
    }
  }
  return holds;
}

void check_reversal_duality(const Integer& p, const Integer& q) {
  const LensParams a = make_params(p, q);
  const LensParams d = make_params(p, a.qbar);
  if (d.b != reverse(a.b)) {
    throw AssertionFailure(Errc::TheoremViolation, "b(p,qbar) != reverse(b(p,q)) at (" + p.get_str() + "," + q.get_str() + ")");
  }
  std::vector<CFTuple> reversed;
  for (const CFTuple& n : zset(a)) reversed.push_back(reverse(n));
  std::sort(reversed.begin(), reversed.end());
  if (reversed != zset(d)) {
    throw AssertionFailure(Errc::TheoremViolation, "Z_{p,qbar} != reverse(Z_{p,q}) at (" + p.get_str() + "," + q.get_str() + ")");
  }
}

}  // namespace lensfill
