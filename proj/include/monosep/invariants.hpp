#pragma once

#include <optional>

#include "monosep/relation_ideal.hpp"

namespace monosep {

struct TorsionOptions {
  /// Overrides the default max(D|a|, 2 * max relator degree).
  std::optional<int> degree_bound;
  /// Scan every k = 1..d instead of only the divisors of d.
  bool strict = false;
};

/// Integer torsion tau_a and torsion exponent E|a|. An absent value means
/// infinite relative to `degree_bound`.
struct TorsionData {
  std::optional<BigInt> tau;
  std::optional<int> exponent;
  int degree_bound = 0;
  bool primitive_part_monic = false;
  std::optional<MonicRelation> tau_witness;       // k == tau, least degree for that k
  std::optional<MonicRelation> exponent_witness;  // degree == exponent
};

struct RingInvariants {
  std::optional<int> algebraic_degree;  // nullopt: a is transcendental
  std::optional<IntPoly> minimal_polynomial;
  BigInt minimal_content = 0;  // d
  IntPoly minimal_primitive;   // f*, with d * f* == minimal polynomial
  TorsionData torsion;
};

/// The least-degree element of V with least positive leading coefficient.
std::optional<IntPoly> minimal_polynomial(const CanonicalBasis& basis);
std::optional<IntPoly> minimal_polynomial(const Presentation& p);

int default_degree_bound(const CanonicalBasis& basis);

TorsionData torsion_data(const CanonicalBasis& basis, const TorsionOptions& options = {});
TorsionData torsion_data(const Presentation& p, const TorsionOptions& options = {});

RingInvariants ring_invariants(const CanonicalBasis& basis, const TorsionOptions& options = {});
RingInvariants ring_invariants(const Presentation& p, const TorsionOptions& options = {});

/// From a member g of V with content k, produces k * phi in V with phi monic
/// of degree <= deg g. Requires a monic torsion relation to exist, i.e. the
/// primitive part of the minimal polynomial must be monic.
/// Throws Error(NotMember) or Error(HypothesisUnmet).
MonicRelation extract_monic_relation(const CanonicalBasis& basis, const IntPoly& g);
MonicRelation extract_monic_relation(const Presentation& p, const IntPoly& g);

}  // namespace monosep
