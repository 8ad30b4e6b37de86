#include "lensfill/exact_arith.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "lensfill/errors.hpp"

namespace lensfill {

std::string format_tuple(const CFTuple& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  os << ')';
  return os.str();
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Rational::Rational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::domain_error("Rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::inverse() const { return Rational(den_, num_); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(Integer(a.num_ * b.den_), Integer(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m < 2) throw InputError(Errc::InvalidInput, "modulus must be >= 2, got " + m.get_str());
  Integer r = mod_floor(a, m);
  Integer inv;
  if (gcd(r, m) != 1 || mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw InputError(Errc::NotInvertible, a.get_str() + " is not invertible mod " + m.get_str());
  }
  return mod_floor(inv, m);
}

Integer continuant(const CFTuple& t) {
  Integer prev = 0;  // K of length -1
  Integer current = 1;
  for (std::int64_t x : t) {
    Integer next = Integer(static_cast<long>(x)) * current - prev;
    prev = std::move(current);
    current = std::move(next);
  }
  return current;
}

}  // namespace lensfill
