#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lensfill/cftuple.hpp"
#include "lensfill/exact_arith.hpp"

namespace lensfill {

struct LensParams {
  Integer p;
  Integer q;
  CFTuple b;  ///< HJ expansion of p/(p-q)
  Integer qbar;

  friend bool operator==(const LensParams&, const LensParams&) = default;
};

/// Throws InputError(InvalidPair) unless p > q >= 1 are coprime.
LensParams make_params(const Integer& p, const Integer& q);

/// Zero continued fractions n of length k with 0 <= n_i <= b_i, sorted
/// lexicographically. For k = 1 this is {(0)}.
std::vector<CFTuple> zset(const LensParams& params);

bool is_member(const LensParams& params, const CFTuple& n);

struct FillingDescriptor {
  LensParams params;
  CFTuple n;
  std::int64_t chi = 0;
  std::int64_t b2 = 0;
  CFTuple handle_counts;  ///< b_i - n_i two-handles attached along the i-th knot

  friend bool operator==(const FillingDescriptor&, const FillingDescriptor&) = default;
};

/// Throws InputError(NotAFilling) when n is not in Z_{p,q}.
FillingDescriptor invariants(const LensParams& params, const CFTuple& n);

struct FillingClass {
  std::vector<FillingDescriptor> representatives;  ///< canonical one first
};

/// Groups zset(params); n and reverse(n) are identified iff q^2 = 1 mod p.
/// Classes are ordered by their canonical representative.
std::vector<FillingClass> classify(const LensParams& params);

/// n_r = (1, 2 x r, 3, 2 x (k-4-r), 1, k-2-r). Requires k >= 4,
/// 0 <= r <= k-4, b_2..b_{k-2} >= 3 and b_k >= k-2; throws
/// InputError(HypothesisViolated) otherwise. Membership and the Euler
/// characteristic 5 + sum(b_i - 3) + r are asserted.
CFTuple corollary_a_family(const LensParams& params, std::int64_t r);

struct MN {
  Integer m;
  Integer nn;
  friend bool operator==(const MN&, const MN&) = default;
};

/// For a positive zero continued fraction of length >= 3 with a single entry
/// equal to 1, replaces that entry by 2 and writes the value as
/// m^2/(m*nn + 1) with gcd(m, nn) = 1. Throws InputError(PreconditionViolated)
/// on bad input and AssertionFailure(TheoremViolation) if the value does not
/// have that form.
MN unique_one_value(const CFTuple& n);

struct RationalBallWitness {
  Integer m;
  Integer h;
  friend bool operator==(const RationalBallWitness&, const RationalBallWitness&) = default;
};

/// Witness (m, h), gcd(m, h) = 1, with p = m^2 and q = m*h - 1, if any.
std::optional<RationalBallWitness> rational_ball_criterion(const Integer& p, const Integer& q);

/// Whether every entry of the expansion of p/q is >= 5. When true, asserts
/// that Z_{p,q} is exactly {(1,2,...,2,1)}.
bool uniqueness_predicate(const Integer& p, const Integer& q);

/// Asserts b(p, qbar) = reverse(b(p, q)) and Z_{p,qbar} = reverse(Z_{p,q}).
void check_reversal_duality(const Integer& p, const Integer& q);

}  // namespace lensfill
