#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "lensfill/cftuple.hpp"
#include "lensfill/exact_arith.hpp"

namespace lensfill {

/// Result of evaluating t1 - 1/(t2 - 1/(... - 1/tk)) bottom-up.
///
/// Inadmissible records the 1-based index i of the first tail [t_i,...,t_k]
/// (scanning from the bottom) whose value is <= 0 at the moment it is used as
/// a denominator. The empty tuple is admissible but carries no value.
class CFValue {
public:
  static CFValue admissible(std::optional<Rational> value) {
    CFValue v;
    v.value_ = std::move(value);
    return v;
  }
  static CFValue inadmissible(std::size_t position) {
    CFValue v;
    v.position_ = position;
    return v;
  }

  bool is_admissible() const noexcept { return position_ == 0; }
  bool has_value() const noexcept { return value_.has_value(); }
  /// Throws std::logic_error unless admissible with a value.
  const Rational& value() const;
  /// Throws std::logic_error when admissible.
  std::size_t position() const;

  friend bool operator==(const CFValue&, const CFValue&) = default;

private:
  CFValue() = default;
  std::optional<Rational> value_;
  std::size_t position_ = 0;
};

/// Hirzebruch-Jung expansion of p/q: the unique tuple with entries >= 2
/// evaluating to p/q. Requires p > q >= 1 coprime (InputError InvalidPair).
CFTuple hj_expand(const Integer& p, const Integer& q);

CFValue eval_cf(const CFTuple& t);

/// True iff t is admissible and evaluates to 0.
bool is_zero_cf(const CFTuple& t);

/// Whether the tridiagonal matrix (diagonal t, off-diagonal -1) is positive
/// semi-definite of rank >= k-1. Entries must be >= 1.
bool is_admissible_matrix(const CFTuple& t);

/// Blowdown at the 1-based position s (t_s must be 1).
CFTuple blowdown(const CFTuple& t, std::size_t s);

/// Inserts 1 at the 1-based position s, 1 <= s <= k+1, and increments the
/// entries that become its neighbours. Strict when s > 1.
CFTuple blowup(const CFTuple& t, std::size_t s);

/// Admissible tuples of length k with value 0: the closure of {(0)} under
/// strict blowups, generated breadth first.
std::set<CFTuple> enumerate_zero_cf(std::size_t k);

/// A sequence of strict blowup positions that produces n from (0); the
/// reverse of repeatedly blowing down the leftmost 1 at a position >= 2.
/// Throws InputError(InvalidInput) if n is not a zero continued fraction.
std::vector<std::size_t> strict_blowup_sequence(const CFTuple& n);

/// Riemenschneider dual: given b with [b] = p/(p-q), returns the expansion
/// of p/q, read off the point diagram.
CFTuple dual_expansion(const CFTuple& b);

/// Same result by recovering (p, q) from [b] and re-expanding.
CFTuple dual_expansion_via_fraction(const CFTuple& b);

CFTuple reverse(const CFTuple& t);

}  // namespace lensfill
