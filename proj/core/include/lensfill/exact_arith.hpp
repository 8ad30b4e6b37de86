#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "lensfill/cftuple.hpp"

namespace lensfill {

using Integer = mpz_class;

/// Throws std::overflow_error if x does not fit.
std::int64_t to_int64(const Integer& x);

/// Non-negative representative of x mod m, m > 0.
Integer mod_floor(const Integer& x, const Integer& m);

/// Exact fraction in lowest terms with positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t value) : num_(static_cast<long>(value)), den_(1) {}  // NOLINT
  Rational(int value) : num_(value), den_(1) {}  // NOLINT
  /// Throws std::domain_error on a zero denominator.
  Rational(Integer numerator, Integer denominator);

  const Integer& numerator() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  int sign() const { return sgn(num_); }
  bool is_integer() const { return den_ == 1; }
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  Integer num_;
  Integer den_;
};

/// x with a*x = 1 (mod m), 1 <= x < m. Throws InputError(NotInvertible) when
/// gcd(a, m) != 1, InputError(InvalidInput) when m < 2.
Integer mod_inverse(const Integer& a, const Integer& m);

/// K() = 1, K(t1) = t1, K(t1..ti) = ti*K(t1..t_{i-1}) - K(t1..t_{i-2}).
Integer continuant(const CFTuple& t);

}  // namespace lensfill
