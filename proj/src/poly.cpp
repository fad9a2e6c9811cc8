#include "monosep/poly.hpp"

#include <sstream>

namespace monosep {

BigInt content(const IntPoly& p) { return gcd_list(p.coeffs()); }

ContentSplit content_split(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "content_split: zero polynomial");
  ContentSplit out;
  out.content = content(p);
  std::vector<BigInt> prim(p.coeffs().begin(), p.coeffs().end());
  for (BigInt& c : prim) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), out.content.get_mpz_t());
  out.primitive = IntPoly(std::move(prim));
  return out;
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<BigRat> v;
  v.reserve(p.coeffs().size());
  for (const BigInt& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

IntPoly to_integer(const RatPoly& p) {
  std::vector<BigInt> v;
  v.reserve(p.coeffs().size());
  for (const BigRat& c : p.coeffs()) {
    if (!is_integer(c)) throw Error(ErrorKind::InvalidInput, "to_integer: non-integral coefficient " + c.get_str());
    v.push_back(c.get_num());
  }
  return IntPoly(std::move(v));
}

BigInt denominator_lcm(const RatPoly& p) {
  BigInt l = 1;
  for (const BigRat& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  return l;
}

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "make_monic: zero polynomial");
  BigRat inv = 1 / p.leading();
  return p * inv;
}

RatDivRem divrem_q(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "divrem_q: zero divisor");
  RatDivRem out;
  out.remainder = num;
  const int dd = den.degree();
  const BigRat lead_inv = 1 / den.leading();
  std::vector<BigRat> quot(num.degree() >= dd ? num.degree() - dd + 1 : 0, BigRat(0));
  while (!out.remainder.is_zero() && out.remainder.degree() >= dd) {
    const std::size_t shift = static_cast<std::size_t>(out.remainder.degree() - dd);
    BigRat c = out.remainder.leading() * lead_inv;
    quot[shift] = c;
    out.remainder.sub_scaled_shifted(c, shift, den);
  }
  out.quotient = RatPoly(std::move(quot));
  return out;
}

RationalGcd gcd_q(std::span<const IntPoly> polys) {
  const std::size_t m = polys.size();
  RationalGcd out;
  out.bezout.assign(m, RatPoly());

  // Running gcd r0 with cofactor vector s0 (sum s0[i] * polys[i] == r0).
  RatPoly r0;
  std::vector<RatPoly> s0(m);
  bool started = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (polys[i].is_zero()) continue;
    RatPoly fi = to_rational(polys[i]);
    if (!started) {
      started = true;
      const BigRat inv = 1 / fi.leading();
      r0 = fi * inv;
      s0[i] = RatPoly{inv};
      continue;
    }
    RatPoly r1 = make_monic(fi);
    std::vector<RatPoly> s1(m);
    s1[i] = RatPoly{BigRat(1) / fi.leading()};
    while (!r1.is_zero()) {
      RatDivRem qr = divrem_q(r0, r1);
      std::vector<RatPoly> s2(m);
      for (std::size_t j = 0; j <= i; ++j) s2[j] = s0[j] - qr.quotient * s1[j];
      r0 = std::move(r1);
      s0 = std::move(s1);
      if (qr.remainder.is_zero()) {
        r1 = RatPoly();
        break;
      }
      // Normalize each remainder to monic to keep the rationals small.
      const BigRat inv = 1 / qr.remainder.leading();
      r1 = qr.remainder * inv;
      for (std::size_t j = 0; j <= i; ++j) s2[j] *= inv;
      s1 = std::move(s2);
    }
  }
  if (!started) throw Error(ErrorKind::AllZero, "gcd_q: all polynomials are zero");
  out.gamma = std::move(r0);
  out.bezout = std::move(s0);
  out.l = 1;
  for (const RatPoly& b : out.bezout) {
    BigInt d = denominator_lcm(b);
    mpz_lcm(out.l.get_mpz_t(), out.l.get_mpz_t(), d.get_mpz_t());
  }
  return out;
}

IntPoly compose(const IntPoly& outer, const IntPoly& inner) {
  IntPoly result;
  const auto cs = outer.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    result = result * inner;
    result += IntPoly{cs[i]};
  }
  return result;
}

bool divides_exactly(const IntPoly& b, const IntPoly& a, IntPoly* quotient) {
  if (b.is_zero()) return a.is_zero();
  IntPoly rem = a;
  const int db = b.degree();
  std::vector<BigInt> quot(a.degree() >= db ? a.degree() - db + 1 : 0, BigInt(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    if (!mpz_divisible_p(rem.leading().get_mpz_t(), b.leading().get_mpz_t())) return false;
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - db);
    BigInt c = rem.leading() / b.leading();
    quot[shift] = c;
    rem.sub_scaled_shifted(c, shift, b);
  }
  if (!rem.is_zero()) return false;
  if (quotient) *quotient = IntPoly(std::move(quot));
  return true;
}

namespace {

template <class Coeff, class Fmt>
std::string format_poly(const DensePoly<Coeff>& p, Fmt magnitude) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    const Coeff& c = cs[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Coeff mag = abs(c);
    if (i == 0) {
      os << magnitude(mag, false);
      continue;
    }
    if (mag != 1) os << magnitude(mag, true);
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& p) {
  return format_poly(p, [](const BigInt& c, bool) { return c.get_str(); });
}

std::string to_string(const RatPoly& p) {
  return format_poly(p, [](const BigRat& c, bool as_coeff) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return as_coeff ? "(" + c.get_str() + ")" : c.get_str();
  });
}

}  // namespace monosep
