#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "monosep/poly.hpp"

namespace monosep {

/// Defining relators f_1..f_m of Z<a>. Zero relators are dropped; a nonzero
/// constant term is rejected since the ring need not have a unit.
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(std::vector<IntPoly> relators);

  std::span<const IntPoly> relators() const { return relators_; }
  std::size_t size() const { return relators_.size(); }
  bool empty() const { return relators_.empty(); }
  int max_degree() const;

 private:
  std::vector<IntPoly> relators_;
};

struct MembershipCertificate {
  std::vector<IntPoly> cofactors;  // one per relator
  IntPoly claim;                   // sum(cofactors[i] * relators[i]) == claim
};

/// Re-multiplies the certificate with plain polynomial arithmetic.
bool verify_certificate(const MembershipCertificate& cert, const Presentation& p);

struct BasisElement {
  IntPoly poly;
  std::vector<IntPoly> cofactors;  // expresses poly in terms of the relators
};

/// Reduced strong Groebner basis of the relator ideal V in Z[x].
///
/// Elements have strictly ascending degrees d_1 < ... < d_r and positive
/// leading coefficients c_1, ..., c_r with c_{i+1} | c_i, c_{i+1} != c_i.
/// For a term c x^e the reducer is the element with the largest d_i <= e and
/// the coefficient is replaced by its residue in [0, c_i); the resulting
/// normal form is unique on cosets of V.
class CanonicalBasis {
 public:
  CanonicalBasis() = default;

  const Presentation& presentation() const { return presentation_; }
  std::span<const BasisElement> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  /// Index of the element with the largest degree <= `degree`.
  std::optional<std::size_t> reducer_index(int degree) const;

  /// Leading coefficient of the reducer at `degree`; nullopt means the
  /// coefficient of x^degree is unconstrained in normal forms.
  std::optional<BigInt> modulus_at(int degree) const;

  /// relators[i] == sum_j relator_certificates()[i][j] * elements()[j].poly
  std::span<const std::vector<IntPoly>> relator_certificates() const { return relator_certs_; }

  /// Expresses a combination of basis elements in terms of the relators.
  MembershipCertificate lift(std::span<const IntPoly> quotients, IntPoly claim) const;

 private:
  friend CanonicalBasis canonical_basis(const Presentation& p);

  Presentation presentation_;
  std::vector<BasisElement> elements_;
  std::vector<std::vector<IntPoly>> relator_certs_;
};

CanonicalBasis canonical_basis(const Presentation& p);

struct Reduction {
  IntPoly remainder;
  std::vector<IntPoly> quotients;  // g == sum(quotients[j] * elements[j]) + remainder
};

Reduction reduce(const IntPoly& g, const CanonicalBasis& basis);

IntPoly normal_form(const IntPoly& g, const CanonicalBasis& basis);

struct MembershipResult {
  bool member = false;
  std::optional<MembershipCertificate> certificate;
};

MembershipResult membership(const IntPoly& g, const CanonicalBasis& basis);
MembershipResult membership(const IntPoly& g, const Presentation& p);

/// k * phi in V with phi monic and without constant term.
struct MonicRelation {
  BigInt k;
  IntPoly phi;
  MembershipCertificate certificate;  // certificate.claim == k * phi
};

/// Least-degree monic phi (zero constant term, degree <= degree_bound) with
/// k * phi in V, or nullopt if none exists up to the bound. Each candidate
/// degree is decided exactly by a lattice membership problem.
std::optional<MonicRelation> monic_multiple_search(const CanonicalBasis& basis, const BigInt& k,
                                                   int degree_bound);
std::optional<MonicRelation> monic_multiple_search(const Presentation& p, const BigInt& k,
                                                   int degree_bound);

}  // namespace monosep
