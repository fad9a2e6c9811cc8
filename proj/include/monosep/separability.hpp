#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monosep/relation_ideal.hpp"

namespace monosep {

enum class FailureKind { NonSquarefreeGcd, NonIntegerGamma, NoRelators };

std::string_view to_string(FailureKind kind);

struct FailureReason {
  FailureKind kind = FailureKind::NoRelators;
  BigInt prime = 0;                  // NonSquarefreeGcd: prime^2 divides every coefficient
  std::size_t coefficient_index = 0; // NonIntegerGamma: degree of the flagged coefficient
  BigRat value = 0;                  // NonIntegerGamma: the flagged coefficient
};

struct SeparabilityVerdict {
  bool separable = false;
  BigInt coefficient_gcd = 0;
  std::optional<SquarefreeWitness> squarefree_witness;  // absent for NoRelators
  std::optional<RationalGcd> rational_gcd;              // absent for NoRelators
  IntPoly combined_relator;  // f_1 + f_2 x^{n_1} + f_3 x^{n_1+n_2} + ...
  std::optional<FailureReason> failure;
  std::optional<MonicRelation> positive_witness;  // k == coefficient_gcd
};

/// f_1 + f_2 x^{n_1} + ... + f_m x^{n_1+...+n_{m-1}}; its content is the gcd
/// of all relator coefficients taken together.
IntPoly combined_relator(const Presentation& p);

/// The finite-separability decision: separable iff the gcd of all relator
/// coefficients is squarefree and the monic rational gcd of the relators has
/// integer coefficients. Separable verdicts carry k * phi in V.
SeparabilityVerdict decide(const CanonicalBasis& basis);
SeparabilityVerdict decide(const Presentation& p);

/// Checks a verdict against the presentation without the canonical basis:
/// certificates are re-multiplied, squarefreeness refactored, the rational
/// gcd re-derived from its Bezout identity and exact divisions.
bool verify_verdict(const SeparabilityVerdict& verdict, const Presentation& p);

/// k (a^n + k_1 a^{n-1} + ... + k_{n-1} a) = 0
struct TheoremWitness {
  BigInt k;
  int degree = 0;
  std::vector<BigInt> tail;  // k_1 .. k_{n-1}
};

/// Throws Error(NotSeparable) for a negative verdict.
TheoremWitness witness_theorem_part1(const SeparabilityVerdict& verdict);

struct TorsionPart {
  BigInt prime;
  BigInt cofactor;  // k / prime
};

struct TorsionSplit {
  BigInt k;
  std::vector<TorsionPart> parts;
  std::vector<BigInt> bezout;  // sum(bezout[i] * parts[i].cofactor) == 1
};

/// Splits a squarefree k > 1 into its primes with a Bezout identity over the
/// cofactors k / p_i. Throws Error(NotSquarefree) or Error(UnitInput).
TorsionSplit torsion_split(const BigInt& k);

}  // namespace monosep
