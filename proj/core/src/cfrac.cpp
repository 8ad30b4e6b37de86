#include "lensfill/cfrac.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lensfill/errors.hpp"

namespace lensfill {

const Rational& CFValue::value() const {
  if (!is_admissible()) throw std::logic_error("value() of an inadmissible continued fraction");
  if (!value_) throw std::logic_error("the empty continued fraction has no value");
  return *value_;
}

std::size_t CFValue::position() const {
  if (is_admissible()) throw std::logic_error("position() of an admissible continued fraction");
  return position_;
}

CFTuple hj_expand(const Integer& p, const Integer& q) {
  if (!(p > q && q >= 1) || gcd(p, q) != 1) {
    throw InputError(Errc::InvalidPair, "need coprime p > q >= 1, got (" + p.get_str() + "," + q.get_str() + ")");
  }
  CFTuple out;
  Integer num = p;
  Integer den = q;
  while (den != 0) {
    Integer a;
    mpz_cdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.push_back(to_int64(a));
    Integer rest = a * den - num;
    num = std::move(den);
    den = std::move(rest);
  }
  return out;
}

CFValue eval_cf(const CFTuple& t) {
  if (t.empty()) return CFValue::admissible(std::nullopt);
  // Tail value num/den with den > 0 throughout.
  Integer num = static_cast<long>(t.back());
  Integer den = 1;
  for (std::size_t i = t.size() - 1; i-- > 0;) {
    if (num <= 0) return CFValue::inadmissible(i + 2);
    Integer next = Integer(static_cast<long>(t[i])) * num - den;
    den = std::move(num);
    num = std::move(next);
  }
  return CFValue::admissible(Rational(num, den));
}

bool is_zero_cf(const CFTuple& t) {
  CFValue v = eval_cf(t);
  return v.is_admissible() && v.has_value() && v.value().sign() == 0;
}

bool is_admissible_matrix(const CFTuple& t) {
  for (std::int64_t x : t)
    if (x < 1) throw InputError(Errc::InvalidInput, "matrix criterion needs positive entries: " + format_tuple(t));
  // Leading principal minors of the tridiagonal matrix are the continuants
  // of the prefixes. PSD of rank >= k-1 iff D_1..D_{k-1} > 0 and D_k >= 0:
  // a vanishing minor before the last one is adjacent to a -1 coupling, which
  // makes a 2x2 principal block indefinite.
  Integer prev = 0;
  Integer minor = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Integer next = Integer(static_cast<long>(t[i])) * minor - prev;
    prev = std::move(minor);
    minor = std::move(next);
    const bool last = i + 1 == t.size();
    if (last ? minor < 0 : minor <= 0) return false;
  }
  return true;
}

CFTuple blowdown(const CFTuple& t, std::size_t s) {
  if (t.size() < 2 || s < 1 || s > t.size()) {
    throw InputError(Errc::InvalidInput, "blowdown position " + std::to_string(s) + " invalid for " + format_tuple(t));
  }
  const std::size_t idx = s - 1;
  if (t[idx] != 1) {
    throw InputError(Errc::NotBlowdownable, "entry at " + std::to_string(s) + " of " + format_tuple(t) + " is not 1");
  }
  CFTuple out;
  out.reserve(t.size() - 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i == idx) continue;
    std::int64_t x = t[i];
    if (i + 1 == idx || i == idx + 1) {
      if (x < 1) throw InputError(Errc::NotBlowdownable, "neighbour would become negative in " + format_tuple(t));
      --x;
    }
    out.push_back(x);
  }
  return out;
}

CFTuple blowup(const CFTuple& t, std::size_t s) {
  if (s < 1 || s > t.size() + 1) {
    throw InputError(Errc::InvalidInput, "blowup position " + std::to_string(s) + " invalid for " + format_tuple(t));
  }
  CFTuple out = t;
  const std::size_t idx = s - 1;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(idx), 1);
  if (idx > 0) ++out[idx - 1];
  if (idx + 1 < out.size()) ++out[idx + 1];
  return out;
}

std::set<CFTuple> enumerate_zero_cf(std::size_t k) {
  if (k < 1) throw InputError(Errc::InvalidInput, "zero continued fractions need length >= 1");
  std::set<CFTuple> level{CFTuple{0}};
  for (std::size_t len = 1; len < k; ++len) {
    std::set<CFTuple> next;
    for (const CFTuple& t : level)
      for (std::size_t s = 2; s <= len + 1; ++s) next.insert(blowup(t, s));
    level = std::move(next);
  }
  return level;
}

std::vector<std::size_t> strict_blowup_sequence(const CFTuple& n) {
  if (!is_zero_cf(n)) throw InputError(Errc::InvalidInput, format_tuple(n) + " is not a zero continued fraction");
  std::vector<std::size_t> positions;
  CFTuple cur = n;
  while (cur.size() > 1) {
    auto it = std::find(cur.begin() + 1, cur.end(), 1);
    if (it == cur.end()) {
      throw AssertionFailure(Errc::TheoremViolation, "no strict blowdown available in " + format_tuple(cur));
    }
    const auto s = static_cast<std::size_t>(it - cur.begin()) + 1;
    positions.push_back(s);
    cur = blowdown(cur, s);
  }
  if (cur != CFTuple{0}) {
    throw AssertionFailure(Errc::TheoremViolation, format_tuple(n) + " does not blow down to (0)");
  }
  std::reverse(positions.begin(), positions.end());
  return positions;
}

namespace {

void require_hj_tuple(const CFTuple& b) {
  if (b.empty() || std::any_of(b.begin(), b.end(), [](std::int64_t x) { return x < 2; })) {
    throw InputError(Errc::InvalidInput, "expected entries >= 2, got " + format_tuple(b));
  }
}

}  // namespace

CFTuple dual_expansion(const CFTuple& b) {
  require_hj_tuple(b);
  // Row i holds b_i - 1 points; each row starts in the column where the
  // previous one ended. a_j - 1 is the number of points in column j.
  std::vector<std::int64_t> column_counts;
  std::size_t col = 0;
  for (std::int64_t entry : b) {
    const auto points = static_cast<std::size_t>(entry - 1);
    if (column_counts.size() < col + points) column_counts.resize(col + points, 0);
    for (std::size_t j = 0; j < points; ++j) ++column_counts[col + j];
    col += points - 1;
  }
  CFTuple a;
  a.reserve(column_counts.size());
  for (std::int64_t c : column_counts) a.push_back(c + 1);
  return a;
}

CFTuple dual_expansion_via_fraction(const CFTuple& b) {
  require_hj_tuple(b);
  const Rational v = eval_cf(b).value();
  // v = p/(p-q) in lowest terms.
  const Integer& p = v.numerator();
  const Integer q = p - v.denominator();
  return hj_expand(p, q);
}

CFTuple reverse(const CFTuple& t) { return CFTuple(t.rbegin(), t.rend()); }

}  // namespace lensfill
