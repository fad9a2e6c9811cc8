#include "monosep/separability.hpp"

#include "monosep/invariants.hpp"

namespace monosep {

std::string_view to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::NonSquarefreeGcd: return "NonSquarefreeGcd";
    case FailureKind::NonIntegerGamma: return "NonIntegerGamma";
    case FailureKind::NoRelators: return "NoRelators";
  }
  return "Unknown";
}

IntPoly combined_relator(const Presentation& p) {
  IntPoly g;
  std::size_t shift = 0;
  for (const IntPoly& f : p.relators()) {
    g += f.shifted(shift);
    shift += static_cast<std::size_t>(f.degree());
  }
  return g;
}

SeparabilityVerdict decide(const CanonicalBasis& basis) {
  const Presentation& p = basis.presentation();
  SeparabilityVerdict v;
  if (p.empty()) {
    v.failure = FailureReason{FailureKind::NoRelators};
    return v;
  }

  std::vector<BigInt> all;
  for (const IntPoly& f : p.relators()) all.insert(all.end(), f.coeffs().begin(), f.coeffs().end());
  v.coefficient_gcd = gcd_list(all);
  v.squarefree_witness = squarefree(v.coefficient_gcd);
  v.rational_gcd = gcd_q(p.relators());
  v.combined_relator = combined_relator(p);

  if (!v.squarefree_witness->is_squarefree) {
    FailureReason r{FailureKind::NonSquarefreeGcd};
    r.prime = *v.squarefree_witness->offending_prime;
    v.failure = r;
    return v;
  }
  const auto gamma = v.rational_gcd->gamma.coeffs();
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (!is_integer(gamma[i])) {
      FailureReason r{FailureKind::NonIntegerGamma};
      r.coefficient_index = i;
      r.value = gamma[i];
      v.failure = r;
      return v;
    }
  }

  v.separable = true;
  // Prefer a small certificate; the combined relator's degree is the bound
  // under which a monic k-multiple is guaranteed.
  v.positive_witness = monic_multiple_search(basis, v.coefficient_gcd, p.max_degree());
  if (!v.positive_witness) v.positive_witness = extract_monic_relation(basis, v.combined_relator);
  return v;
}

SeparabilityVerdict decide(const Presentation& p) { return decide(canonical_basis(p)); }

bool verify_verdict(const SeparabilityVerdict& v, const Presentation& p) {
  if (p.empty()) return !v.separable && v.failure && v.failure->kind == FailureKind::NoRelators;

  std::vector<BigInt> all;
  for (const IntPoly& f : p.relators()) all.insert(all.end(), f.coeffs().begin(), f.coeffs().end());
  const BigInt k = gcd_list(all);
  if (k != v.coefficient_gcd) return false;

  if (v.separable) {
    if (!v.positive_witness) return false;
    const MonicRelation& w = *v.positive_witness;
    if (w.k != k || !squarefree(k).is_squarefree) return false;
    if (!w.phi.is_monic() || !w.phi.has_zero_constant()) return false;
    if (w.certificate.claim != w.phi * k) return false;
    return verify_certificate(w.certificate, p);
  }

  if (!v.failure) return false;
  switch (v.failure->kind) {
    case FailureKind::NoRelators:
      return false;
    case FailureKind::NonSquarefreeGcd: {
      const BigInt& q = v.failure->prime;
      if (q < 2 || mpz_probab_prime_p(q.get_mpz_t(), 30) == 0) return false;
      const BigInt sq = q * q;
      for (const BigInt& c : all)
        if (!mpz_divisible_p(c.get_mpz_t(), sq.get_mpz_t())) return false;
      return true;
    }
    case FailureKind::NonIntegerGamma: {
      if (!v.rational_gcd) return false;
      const RationalGcd& rg = *v.rational_gcd;
      if (!rg.gamma.is_monic() || rg.bezout.size() != p.size()) return false;
      // gamma is a Q-combination of the relators and divides each of them,
      // hence it is their monic gcd.
      RatPoly sum;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const RatPoly fi = to_rational(p.relators()[i]);
        sum += rg.bezout[i] * fi;
        if (!divrem_q(fi, rg.gamma).remainder.is_zero()) return false;
      }
      if (sum != rg.gamma) return false;
      return rg.gamma.coeff(v.failure->coefficient_index) == v.failure->value && !is_integer(v.failure->value);
    }
  }
  return false;
}

TheoremWitness witness_theorem_part1(const SeparabilityVerdict& v) {
  if (!v.separable || !v.positive_witness)
    throw Error(ErrorKind::NotSeparable, "witness_theorem_part1: verdict is not separable");
  const IntPoly& phi = v.positive_witness->phi;
  TheoremWitness w;
  w.k = v.positive_witness->k;
  w.degree = phi.degree();
  for (int i = w.degree - 1; i >= 1; --i) w.tail.push_back(phi.coeff(static_cast<std::size_t>(i)));
  return w;
}

TorsionSplit torsion_split(const BigInt& k) {
  if (k < 1) throw Error(ErrorKind::NonPositive, "torsion_split: k must be positive");
  if (k == 1) throw Error(ErrorKind::UnitInput, "torsion_split: k = 1 has no prime parts");
  const SquarefreeWitness w = squarefree(k);
  if (!w.is_squarefree)
    throw Error(ErrorKind::NotSquarefree, "torsion_split: " + k.get_str() + " is divisible by " +
                                              w.offending_prime->get_str() + "^2");
  TorsionSplit out;
  out.k = k;
  std::vector<BigInt> cofactors;
  for (const PrimePower& pp : w.factorization) {
    BigInt c = k / pp.prime;
    out.parts.push_back({pp.prime, c});
    cofactors.push_back(c);
  }
  BezoutResult b = bezout(cofactors);
  out.bezout = std::move(b.cofactors);
  return out;
}

}  // namespace monosep
