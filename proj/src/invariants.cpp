#include "monosep/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace monosep {

std::optional<IntPoly> minimal_polynomial(const CanonicalBasis& basis) {
  if (basis.empty()) return std::nullopt;
  return basis.elements().front().poly;
}

std::optional<IntPoly> minimal_polynomial(const Presentation& p) {
  return minimal_polynomial(canonical_basis(p));
}

int default_degree_bound(const CanonicalBasis& basis) {
  const int algebraic = basis.empty() ? 0 : basis.elements().front().poly.degree();
  return std::max({1, algebraic, 2 * basis.presentation().max_degree()});
}

TorsionData torsion_data(const CanonicalBasis& basis, const TorsionOptions& options) {
  TorsionData out;
  out.degree_bound = options.degree_bound.value_or(default_degree_bound(basis));
  if (out.degree_bound < 1) throw Error(ErrorKind::InvalidBound, "torsion_data: degree bound must be >= 1");
  auto minimal = minimal_polynomial(basis);
  if (!minimal) return out;

  const ContentSplit split = content_split(*minimal);
  out.primitive_part_monic = split.primitive.is_monic();

  // Admissible k are closed under gcd and d itself is admissible whenever
  // any k is, so tau divides d.
  std::vector<BigInt> candidates;
  if (options.strict) {
    for (BigInt k = 1; k <= split.content; ++k) candidates.push_back(k);
  } else {
    candidates = divisors(split.content);
  }
  for (const BigInt& k : candidates) {
    if (auto rel = monic_multiple_search(basis, k, out.degree_bound)) {
      out.tau = k;
      out.tau_witness = std::move(rel);
      break;
    }
  }
  if (!out.tau) return out;

  // The least degree of any monic relation is attained at k = d.
  out.exponent_witness = monic_multiple_search(basis, split.content, out.degree_bound);
  if (!out.exponent_witness || out.exponent_witness->phi.degree() > out.tau_witness->phi.degree())
    out.exponent_witness = out.tau_witness;
  out.exponent = out.exponent_witness->phi.degree();
  return out;
}

TorsionData torsion_data(const Presentation& p, const TorsionOptions& options) {
  return torsion_data(canonical_basis(p), options);
}

RingInvariants ring_invariants(const CanonicalBasis& basis, const TorsionOptions& options) {
  RingInvariants out;
  out.minimal_polynomial = minimal_polynomial(basis);
  if (out.minimal_polynomial) {
    out.algebraic_degree = out.minimal_polynomial->degree();
    ContentSplit split = content_split(*out.minimal_polynomial);
    out.minimal_content = split.content;
    out.minimal_primitive = std::move(split.primitive);
  }
  out.torsion = torsion_data(basis, options);
  return out;
}

RingInvariants ring_invariants(const Presentation& p, const TorsionOptions& options) {
  return ring_invariants(canonical_basis(p), options);
}

MonicRelation extract_monic_relation(const CanonicalBasis& basis, const IntPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::InvalidInput, "extract_monic_relation: g must be nonzero");
  if (!membership(g, basis).member)
    throw Error(ErrorKind::NotMember, "extract_monic_relation: " + to_string(g) + " is not in the relator ideal");
  auto minimal = minimal_polynomial(basis);
  if (!minimal || !content_split(*minimal).primitive.is_monic())
    throw Error(ErrorKind::HypothesisUnmet,
                "extract_monic_relation: no monic torsion relation d*f(a) = 0 exists");
  const BigInt k = content(g);
  auto rel = monic_multiple_search(basis, k, g.degree());
  if (!rel)
    throw std::logic_error("extract_monic_relation: no monic k-multiple of degree <= deg g for " + to_string(g));
  return *std::move(rel);
}

MonicRelation extract_monic_relation(const Presentation& p, const IntPoly& g) {
  return extract_monic_relation(canonical_basis(p), g);
}

}  // namespace monosep
