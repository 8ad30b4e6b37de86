#include "lensfill/homology.hpp"

#include <algorithm>
#include <string>

#include "lensfill/cfrac.hpp"
#include "lensfill/errors.hpp"

namespace lensfill {

MuBasis mu_basis(const CFTuple& b, const Integer& p) {
  if (b.empty()) throw InputError(Errc::InvalidInput, "empty b tuple");
  if (continuant(b) != p) {
    throw AssertionFailure(Errc::ClosureViolated, "continuant of " + format_tuple(b) + " is not " + p.get_str());
  }
  MuBasis basis{p, {}};
  Integer prev = 0;
  Integer cur = mod_floor(1, p);
  for (std::int64_t x : b) {
    basis.coeffs.push_back(cur);
    Integer next = mod_floor(Integer(static_cast<long>(x)) * cur - prev, p);
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (cur != 0) {
    throw AssertionFailure(Errc::ClosureViolated, "closure relation fails for " + format_tuple(b));
  }
  return basis;
}

namespace {

int bit(const std::vector<int>& s, std::ptrdiff_t i) {
  return i < 0 || i >= static_cast<std::ptrdiff_t>(s.size()) ? 0 : s[static_cast<std::size_t>(i)];
}

void require_bits(const CFTuple& b, const std::vector<int>& bits) {
  if (bits.size() != b.size()) throw InputError(Errc::InvalidSpin, "spin vector length differs from k");
  for (int x : bits)
    if (x != 0 && x != 1) throw InputError(Errc::InvalidSpin, "spin entries must be 0 or 1");
}

std::optional<Integer> half(const Integer& x) {
  if (mpz_even_p(x.get_mpz_t()) == 0) return std::nullopt;
  return Integer(x / 2);
}

}  // namespace

bool is_valid_spin(const CFTuple& b, const SpinStructure& s) {
  require_bits(b, s.bits);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto j = static_cast<std::ptrdiff_t>(i);
    const std::int64_t v = bit(s.bits, j - 1) + bit(s.bits, j + 1) + b[i] * (1 - s.bits[i]);
    if (v % 2 != 0) return false;
  }
  return true;
}

std::vector<SpinStructure> spin_structures(const CFTuple& b) {
  if (b.empty()) throw InputError(Errc::InvalidInput, "empty b tuple");
  std::vector<SpinStructure> out;
  const std::size_t k = b.size();
  // s_1 determines the rest through equations 1..k-1; equation k decides.
  for (int first = 0; first <= 1; ++first) {
    std::vector<int> s(k, 0);
    s[0] = first;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const auto j = static_cast<std::ptrdiff_t>(i);
      const std::int64_t v = bit(s, j - 1) + b[i] * (1 - s[i]);
      s[i + 1] = static_cast<int>(v % 2);
    }
    SpinStructure candidate{std::move(s)};
    if (is_valid_spin(b, candidate)) out.push_back(std::move(candidate));
  }
  std::sort(out.begin(), out.end(), [](const SpinStructure& x, const SpinStructure& y) { return x.bits < y.bits; });
  const Integer p = continuant(b);
  const std::size_t expected = mpz_even_p(p.get_mpz_t()) != 0 ? 2 : 1;
  if (out.size() != expected) {
    throw AssertionFailure(Errc::TheoremViolation, "found " + std::to_string(out.size()) + " spin structures for " + format_tuple(b));
  }
  return out;
}

std::optional<std::vector<Integer>> gamma_filling_coefficients(const CFTuple& b, const std::vector<int>& bits) {
  require_bits(b, bits);
  std::vector<Integer> coef;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto j = static_cast<std::ptrdiff_t>(i);
    const Integer v = bit(bits, j - 1) + bit(bits, j + 1) + Integer(static_cast<long>(b[i])) * (1 - bits[i]);
    auto h = half(v);
    if (!h) return std::nullopt;
    if (i > 0) *h -= 1;
    coef.push_back(std::move(*h));
  }
  return coef;
}

std::optional<std::vector<Integer>> gamma_standard_coefficients(const CFTuple& b, const std::vector<int>& bits) {
  require_bits(b, bits);
  const std::size_t k = b.size();
  std::vector<int> t{1 - bits[0]};
  t.insert(t.end(), bits.begin(), bits.end());
  std::vector<Integer> bprime{1, Integer(static_cast<long>(1 - b[0]))};
  for (std::size_t i = 1; i < k; ++i) bprime.push_back(Integer(static_cast<long>(-b[i])));

  std::vector<Integer> coef;
  for (std::size_t i = 0; i <= k; ++i) {
    const auto j = static_cast<std::ptrdiff_t>(i);
    const Integer v = 2 + bprime[i] * (1 - t[i]) - bit(t, j - 1) - bit(t, j + 1);
    auto h = half(v);
    if (!h) return std::nullopt;
    coef.push_back(std::move(*h));
  }
  return coef;
}

namespace {

void require_spin(const CFTuple& b, const SpinStructure& s) {
  if (!is_valid_spin(b, s)) throw InputError(Errc::InvalidSpin, "parity condition fails for b=" + format_tuple(b));
}

}  // namespace

H1Element gamma_filling(const CFTuple& b, const SpinStructure& s) {
  require_spin(b, s);
  const Integer p = continuant(b);
  const MuBasis mu = mu_basis(b, p);
  const std::vector<Integer> coef = *gamma_filling_coefficients(b, s.bits);
  Integer total = 0;
  for (std::size_t i = 0; i < coef.size(); ++i) total += coef[i] * mu.coeffs[i];
  return H1Element(p, total);
}

H1Element gamma_standard(const CFTuple& b, const SpinStructure& s) {
  require_spin(b, s);
  const Integer p = continuant(b);
  const MuBasis mu = mu_basis(b, p);
  const std::vector<Integer> coef = *gamma_standard_coefficients(b, s.bits);
  // nu_0 = -nu_1, nu_i -> mu_i; orientation reversal negates the result.
  Integer total = -coef[0];
  for (std::size_t i = 1; i < coef.size(); ++i) total += coef[i] * mu.coeffs[i - 1];
  return H1Element(p, -total);
}

std::vector<Integer> rotation_numbers(const CFTuple& n) {
  if (!is_zero_cf(n)) throw InputError(Errc::InvalidInput, format_tuple(n) + " is not a zero continued fraction");
  const std::size_t k = n.size();
  std::vector<Integer> r{0};
  if (k == 1) return r;
  r.emplace_back(1);
  for (std::size_t i = 1; i + 1 < k; ++i) r.push_back(Integer(static_cast<long>(n[i])) * r[i] - r[i - 1]);
  if (r[k - 2] - Integer(static_cast<long>(n[k - 1])) * r[k - 1] != -1) {
    throw AssertionFailure(Errc::TerminalRelationViolated, "terminal relation fails for " + format_tuple(n));
  }
  return r;
}

}  // namespace lensfill
