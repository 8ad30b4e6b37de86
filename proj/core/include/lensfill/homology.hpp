#pragma once

#include <optional>
#include <vector>

#include "lensfill/cftuple.hpp"
#include "lensfill/exact_arith.hpp"

namespace lensfill {

/// The class residue * mu_1 in H_1(L(p,q)) = Z/p, with 0 <= residue < p.
class H1Element {
public:
  H1Element(Integer p, const Integer& value) : p_(std::move(p)), residue_(mod_floor(value, p_)) {}
  const Integer& p() const noexcept { return p_; }
  const Integer& residue() const noexcept { return residue_; }
  H1Element operator-() const { return H1Element(p_, -residue_); }
  friend bool operator==(const H1Element&, const H1Element&) = default;

private:
  Integer p_;
  Integer residue_;
};

/// mu_i = coeffs[i-1] * mu_1 in Z/p.
struct MuBasis {
  Integer p;
  std::vector<Integer> coeffs;
};

/// c_1 = 1, c_{i+1} = b_i c_i - c_{i-1} (mod p). Asserts continuant(b) = p
/// and the closure b_k c_k = c_{k-1} (mod p).
MuBasis mu_basis(const CFTuple& b, const Integer& p);

struct SpinStructure {
  std::vector<int> bits;  ///< s_1..s_k
  friend bool operator==(const SpinStructure&, const SpinStructure&) = default;
};

/// Parity condition s_{i-1} + s_{i+1} + b_i (1 - s_i) = 0 mod 2 for all i,
/// with s_0 = s_{k+1} = 0.
bool is_valid_spin(const CFTuple& b, const SpinStructure& s);

/// All valid bit vectors, in lexicographic order. The count 2 - (p mod 2)
/// with p = continuant(b) is asserted.
std::vector<SpinStructure> spin_structures(const CFTuple& b);

/// Coefficients of mu_1..mu_k in the filling-side formula; nullopt when some
/// coefficient is not an integer. Bits must be 0/1.
std::optional<std::vector<Integer>> gamma_filling_coefficients(const CFTuple& b, const std::vector<int>& bits);

/// Coefficients of nu_0..nu_k in the closed formula for L(p, p-q) with
/// (t_0, ..., t_k) = (1 - s_1, s_1, ..., s_k); nullopt when non-integral.
std::optional<std::vector<Integer>> gamma_standard_coefficients(const CFTuple& b, const std::vector<int>& bits);

/// Throw InputError(InvalidSpin) unless s is a valid spin structure for b.
H1Element gamma_filling(const CFTuple& b, const SpinStructure& s);
H1Element gamma_standard(const CFTuple& b, const SpinStructure& s);

/// r_1 = 0, r_2 = 1, r_{i+1} = n_i r_i - r_{i-1}; asserts the terminal
/// relation r_{k-1} - n_k r_k = -1. For k = 1 returns (0).
/// Throws InputError(InvalidInput) unless n is a zero continued fraction.
std::vector<Integer> rotation_numbers(const CFTuple& n);

}  // namespace lensfill
