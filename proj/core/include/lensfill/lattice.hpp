#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lensfill/cftuple.hpp"
#include "lensfill/exact_arith.hpp"
#include "lensfill/int_matrix.hpp"

namespace lensfill {

/// Coefficients over the basis (l, f_1, ..., f_M).
using LatticeVector = std::vector<Integer>;

/// Form diag(+1, -1, ..., -1). Both vectors must have the same length.
Integer lattice_pair(const LatticeVector& x, const LatticeVector& y);

struct StringConfiguration {
  CFTuple b;
  CFTuple source_n;  ///< the n replayed by build_string
  std::size_t M = 0;
  std::vector<LatticeVector> classes;  ///< [C_0], ..., [C_k]

  /// Target self-intersections (1, 1 - b_1, -b_2, ..., -b_k).
  std::vector<Integer> target_type() const;
};

/// Self-intersections match the target type, consecutive classes pair to 1
/// and all other pairs to 0.
bool string_invariants_hold(const StringConfiguration& cfg);

/// Replays a strict-blowup path from (0) to n on the two lines (l, l), then
/// blows up b_i - n_i generic points on the i-th curve. Throws
/// InputError(InvalidInput) unless n is a zero continued fraction with
/// n_i <= b_i; the string invariants are re-checked (ConsistencyViolated).
StringConfiguration build_string(const CFTuple& b, const CFTuple& n);

/// [C_0] = l, [C_1] = l - (b_1 distinct exceptionals), [C_i] = e - (b_i - 1
/// distinct other exceptionals) for i >= 2, plus the adjunction identity.
bool validate_hom_classes(const StringConfiguration& cfg);

/// Both claims about the sets A^i of subtracted exceptionals and the
/// leading exceptionals e^j_1, checked on the vectors. Requires
/// validate_hom_classes(cfg).
bool validate_string_lemma(const StringConfiguration& cfg);

struct ComplementHomology {
  std::int64_t b2 = 0;
  std::vector<Integer> h1_divisors;  ///< elementary divisors > 1
  Integer h1_order;
  Integer det_string;      ///< |det| of the Gram matrix of the string
  Integer det_complement;  ///< |det| of the Gram matrix of the orthogonal complement
};

/// Homology of the complement of the string, from the pairing matrix of the
/// classes against the lattice basis. Asserts b2 = sum(b - n) - 1,
/// |det(string)| = p and |det(complement)| * |H_1|^2 = p
/// (AssertionFailure(ConsistencyViolated)).
ComplementHomology complement_homology(const StringConfiguration& cfg);

/// Every x in Z^n with x^T G x = norm, for positive definite G, by exact
/// Fincke-Pohst enumeration. Each hit is checked against the bound
/// x_i^2 <= norm * (G^{-1})_{ii} (AssertionFailure(EnumerationBoundViolated)).
/// Throws InputError(InvalidInput) if G is not positive definite.
std::vector<std::vector<Integer>> enumerate_norm_vectors(const IntMatrix& gram, const Integer& norm);

struct MinusOneCensus {
  /// S_i: vectors e with e.e = -1, e.[C_0] = 0 pairing non-trivially with
  /// [C_i] only.
  std::vector<std::vector<LatticeVector>> per_curve;
  /// e.e = -1 and orthogonal to every class.
  std::vector<LatticeVector> orthogonal;
};

MinusOneCensus minus_one_census(const StringConfiguration& cfg);

/// |S_i| / 2 for i = 1..k; asserts b - s = source_n.
std::vector<std::int64_t> minimal_si_counts(const StringConfiguration& cfg);

/// Norm -1 vectors of the orthogonal complement of the whole string,
/// enumerated inside an integral basis of that complement.
std::vector<LatticeVector> orthogonal_minus_one_classes(const StringConfiguration& cfg);

}  // namespace lensfill
