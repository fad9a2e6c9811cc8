#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "monosep/relation_ideal.hpp"

namespace monosep {

class FiniteRing;
struct InfiniteQuotient;
using QuotientResult = std::variant<FiniteRing, InfiniteQuotient>;

/// Finite quotient Z<a> / (V + qK), K = Z<a>.
///
/// Elements are normal forms with respect to the ideal V + q*x*Z[x]: a
/// coefficient vector over the standard monomials x^1 .. x^s, where s + 1 is
/// the degree of the monic element of that ideal. The coefficient of x^e
/// lives in [0, m_e) with m_e | q; for prime q every m_e equals q.
class FiniteRing {
 public:
  using Element = std::vector<std::int64_t>;

  const BigInt& modulus() const { return modulus_; }
  std::size_t dimension() const { return moduli_.size(); }
  std::vector<int> standard_monomials() const;
  std::span<const std::int64_t> coefficient_moduli() const { return moduli_; }
  BigInt carrier_size() const;

  /// Strong basis of V + q*x*Z[x] (the relators plus q*x).
  const CanonicalBasis& quotient_basis() const { return basis_; }

  Element zero() const { return Element(moduli_.size(), 0); }
  Element generator() const;  // image of a

  Element add(const Element& u, const Element& v) const;
  Element neg(const Element& u) const;
  Element sub(const Element& u, const Element& v) const;
  Element mul(const Element& u, const Element& v) const;
  Element scale(const BigInt& n, const Element& u) const;

  /// Canonical homomorphism Z<a> -> this ring, u(a) |-> normal form of u.
  Element image(const IntPoly& u) const;
  IntPoly lift(const Element& u) const;
  bool is_canonical(const Element& u) const;

  /// Mixed-radix indexing of the carrier; valid when carrier_size() < 2^63.
  std::uint64_t index_of(const Element& u) const;
  Element element_at(std::uint64_t index) const;

  /// a * x^e for each standard monomial x^e.
  std::vector<Element> multiplication_action() const;

 private:
  friend QuotientResult build_quotient(const Presentation& p, const BigInt& q);

  template <class Raw>
  Element normalize(Raw& raw) const;

  BigInt modulus_;
  std::int64_t q_ = 0;
  CanonicalBasis basis_;
  std::vector<std::int64_t> moduli_;           // m_e for e = 1..s
  std::vector<std::int64_t> reducer_lc_;       // per degree 1..s
  std::vector<std::vector<std::int64_t>> reducer_tail_;  // per degree: coefficients below e
  std::vector<Element> power_table_;           // normal form of x^k, k = 0..2s (entry 0 unused)
};

/// The quotient is infinite: no element of V + qK has a leading coefficient
/// that is a unit mod q. `ladder` lists (degree, leading coefficient) of the
/// strong basis of V + q*x*Z[x].
struct InfiniteQuotient {
  BigInt modulus;
  std::vector<std::pair<int, BigInt>> ladder;
};

/// Throws Error(InvalidModulus) unless 2 <= q < 2^31.
QuotientResult build_quotient(const Presentation& p, const BigInt& q);

/// Least subset containing the generators and 0 that is closed under
/// addition, negation and multiplication. Sorted by index.
std::vector<FiniteRing::Element> subring_closure(const FiniteRing& ring,
                                                 std::span<const FiniteRing::Element> generators);

struct SeparationOptions {
  /// Quotients with a larger carrier are skipped.
  std::uint64_t max_carrier = std::uint64_t{1} << 22;
};

struct SeparationResult {
  bool found = false;
  std::optional<FiniteRing> quotient;
  FiniteRing::Element image_of_target;
  std::vector<FiniteRing::Element> subring_image;
  std::optional<BigInt> bound_exhausted;
  std::vector<BigInt> moduli_tried;    // finite quotients examined
  std::vector<BigInt> moduli_skipped;  // finite but above max_carrier
};

/// Moduli 2..bound: primes ascending, then proper prime powers, then the rest.
std::vector<BigInt> modulus_order(const BigInt& bound);

/// Searches the quotients Z<a>/(V + qK) for one in which the image of
/// `target` lies outside the image of the subring generated by `generators`.
SeparationResult separate(const Presentation& p, const IntPoly& target, std::span<const IntPoly> generators,
                          const BigInt& modulus_bound, const SeparationOptions& options = {});

}  // namespace monosep
