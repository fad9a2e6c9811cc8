#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monosep/error.hpp"
#include "monosep/exact_arith.hpp"

namespace monosep {

/// Dense univariate polynomial, coefficients in ascending degree order.
/// The highest stored coefficient is nonzero; the zero polynomial stores none.
template <class Coeff>
class DensePoly {
 public:
  DensePoly() = default;

  explicit DensePoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  DensePoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  static DensePoly monomial(const Coeff& c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = c;
    return DensePoly(std::move(v));
  }

  static DensePoly x() { return monomial(Coeff(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Coeff& leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }

  std::span<const Coeff> coeffs() const { return coeffs_; }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  bool has_zero_constant() const { return coeffs_.empty() || sgn(coeffs_[0]) == 0; }

  void set_coeff(std::size_t i, const Coeff& c) {
    if (i >= coeffs_.size()) {
      if (sgn(c) == 0) return;
      coeffs_.resize(i + 1, Coeff(0));
    }
    coeffs_[i] = c;
    trim();
  }

  /// Multiplication by x^k.
  DensePoly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Coeff> v(k, Coeff(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return DensePoly(std::move(v));
  }

  DensePoly operator-() const {
    DensePoly r = *this;
    for (Coeff& c : r.coeffs_) c = -c;
    return r;
  }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  DensePoly& operator-=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  DensePoly& operator*=(const Coeff& s) {
    if (sgn(s) == 0) {
      coeffs_.clear();
      return *this;
    }
    for (Coeff& c : coeffs_) c *= s;
    return *this;
  }

  /// this -= s * x^k * o, without materializing the product.
  void sub_scaled_shifted(const Coeff& s, std::size_t k, const DensePoly& o) {
    if (sgn(s) == 0 || o.is_zero()) return;
    if (o.coeffs_.size() + k > coeffs_.size()) coeffs_.resize(o.coeffs_.size() + k, Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i + k] -= s * o.coeffs_[i];
    trim();
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const Coeff& s) { return a *= s; }
  friend DensePoly operator*(const Coeff& s, DensePoly a) { return a *= s; }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePoly(std::move(v));
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPoly = DensePoly<BigInt>;
using RatPoly = DensePoly<BigRat>;

struct ContentSplit {
  BigInt content;     // positive
  IntPoly primitive;  // content * primitive == input
};

struct RatDivRem {
  RatPoly quotient;
  RatPoly remainder;
};

struct RationalGcd {
  RatPoly gamma;                // monic
  std::vector<RatPoly> bezout;  // sum(bezout[i] * inputs[i]) == gamma
  BigInt l;                     // lcm of all cofactor denominators
};

BigInt content(const IntPoly& p);

/// Throws Error(ZeroPolynomial) for p == 0.
ContentSplit content_split(const IntPoly& p);

RatPoly to_rational(const IntPoly& p);

/// Exact conversion; throws Error(InvalidInput) if a coefficient is not integral.
IntPoly to_integer(const RatPoly& p);

/// Least common multiple of the coefficient denominators (1 for the zero polynomial).
BigInt denominator_lcm(const RatPoly& p);

RatPoly make_monic(const RatPoly& p);

/// num = den * quotient + remainder with deg(remainder) < deg(den).
RatDivRem divrem_q(const RatPoly& num, const RatPoly& den);

/// Monic gcd over Q of the inputs with Bezout cofactors, computed by the
/// extended Euclidean algorithm. Throws Error(AllZero) if every input is zero.
RationalGcd gcd_q(std::span<const IntPoly> polys);

IntPoly compose(const IntPoly& outer, const IntPoly& inner);

/// Exact division a / b in Z[x]; returns false if b does not divide a.
bool divides_exactly(const IntPoly& b, const IntPoly& a, IntPoly* quotient = nullptr);

/// Canonical text form: descending degree, explicit integer coefficients,
/// e.g. "2x^3 - 4x". The zero polynomial prints as "0".
std::string to_string(const IntPoly& p);
std::string to_string(const RatPoly& p);

/// Horner evaluation of a polynomial without constant term at an element of a
/// possibly non-unital ring. The context supplies zero(), add(u, v),
/// mul(u, v) and scale(BigInt, u).
template <class Ring, class Elem>
Elem evaluate_mod(const IntPoly& p, const Elem& point, const Ring& ring) {
  if (!p.has_zero_constant())
    throw Error(ErrorKind::ConstantTerm, "evaluate_mod: constant term cannot be evaluated in a non-unital ring");
  if (p.is_zero()) return ring.zero();
  // acc = c_n a; acc = acc*a + c_i a for i = n-1 .. 1
  const auto cs = p.coeffs();
  Elem acc = ring.scale(cs[cs.size() - 1], point);
  for (std::size_t i = cs.size() - 1; i-- > 1;) {
    acc = ring.add(ring.mul(acc, point), ring.scale(cs[i], point));
  }
  return acc;
}

}  // namespace monosep
