#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace monosep {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct BezoutResult {
  BigInt gcd;
  std::vector<BigInt> cofactors;  // sum(cofactors[i] * values[i]) == gcd
};

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct SquarefreeWitness {
  bool is_squarefree = true;
  std::optional<BigInt> offending_prime;  // least prime whose square divides n
  std::vector<PrimePower> factorization;  // primes ascending
};

inline constexpr std::uint64_t kDefaultTrialBound = 1'000'000;

/// Nonnegative gcd of all values; 0 for an empty sequence.
BigInt gcd_list(std::span<const BigInt> values);

BigInt lcm_list(std::span<const BigInt> values);

/// Extended Euclid over a list. Throws Error(AllZero) if every value is zero.
BezoutResult bezout(std::span<const BigInt> values);

/// Full factorization of n >= 1: trial division up to `trial_bound`, then
/// Brent's variant of Pollard rho on whatever composite cofactor remains.
std::vector<PrimePower> factorize(const BigInt& n,
                                  std::uint64_t trial_bound = kDefaultTrialBound);

SquarefreeWitness squarefree(const BigInt& n,
                             std::uint64_t trial_bound = kDefaultTrialBound);

/// Positive divisors of n >= 1 in ascending order.
std::vector<BigInt> divisors(const BigInt& n);

/// Floor division and the matching residue, which has the sign of b.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor_mod(const BigInt& a, const BigInt& b);

bool is_integer(const BigRat& r);

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

}  // namespace monosep
