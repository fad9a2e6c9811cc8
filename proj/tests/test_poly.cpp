#include "doctest.h"
#include "monosep/error.hpp"
#include "monosep/poly.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace monosep;

TEST_CASE("ring operations") {
  CHECK((P("x^2 - x") + P("x - x^2")).is_zero());
  CHECK(P("x") * P("x") == P("x^2"));
  CHECK(P("2x^2 + x") * BigInt(3) == P("6x^2 + 3x"));
  CHECK(IntPoly{}.degree() == -1);
  CHECK(P("3x^4 - x").leading() == 3);
  CHECK(P("x^3 - 2x").is_monic());
}

TEST_CASE("content and primitive part") {
  auto s = content_split(P("6x^3 - 12x"));
  CHECK(s.content == 6);
  CHECK(s.primitive == P("x^3 - 2x"));
  s = content_split(P("x^2 - x"));
  CHECK(s.content == 1);
  CHECK(s.primitive == P("x^2 - x"));
  s = content_split(P("4x^2 - 2x"));
  CHECK(s.content == 2);
  CHECK(s.primitive == P("2x^2 - x"));
  CHECK(content_split(P("-3x")).primitive == P("-x"));
  CHECK_THROWS_AS(content_split(IntPoly{}), Error);
}

TEST_CASE("content is multiplicative") {
  oracle::Random rng(5);
  for (int t = 0; t < 500; ++t) {
    const IntPoly a = rng.relator(6, 40) * BigInt(rng.uniform(1, 9));
    const IntPoly b = rng.multiplier(5, 40);
    if (b.is_zero()) continue;
    CHECK(content(a * b) == content(a) * content(b));
  }
}

TEST_CASE("rational division") {
  const auto r = divrem_q(to_rational(P("x^3 + x")), to_rational(P("x^2 - x")));
  CHECK(r.quotient == to_rational(IntPoly{1, 1}));
  CHECK(r.remainder == to_rational(P("2x")));
  const RatPoly p = to_rational(P("5x^4 - 3x"));
  const auto self = divrem_q(p, p);
  CHECK(self.quotient == R({1}));
  CHECK(self.remainder.is_zero());
  const auto small = divrem_q(to_rational(P("3x")), to_rational(P("x^2 - x")));
  CHECK(small.quotient.is_zero());
  CHECK(small.remainder == to_rational(P("3x")));
  CHECK_THROWS_AS(divrem_q(p, RatPoly{}), Error);
}

TEST_CASE("rational division reconstructs") {
  oracle::Random rng(7);
  for (int t = 0; t < 500; ++t) {
    const RatPoly a = to_rational(rng.multiplier(8, 30));
    const RatPoly b = to_rational(rng.relator(5, 30)) * BigRat(1, rng.uniform(1, 6));
    const auto r = divrem_q(a, b);
    CHECK(r.quotient * b + r.remainder == a);
    CHECK(r.remainder.degree() < b.degree());
  }
}

TEST_CASE("rational gcd") {
  std::vector<IntPoly> v{P("x^3 - x"), P("6x^2 - 6x")};
  CHECK(gcd_q(v).gamma == to_rational(P("x^2 - x")));
  v = {P("2x^2 + x")};
  CHECK(gcd_q(v).gamma == R({0, BigRat(1, 2), 1}));
  v = {P("3x^2 + 2x"), IntPoly{}};
  CHECK(gcd_q(v).gamma == R({0, BigRat(2, 3), 1}));
  v = {IntPoly{}, IntPoly{}};
  CHECK_THROWS_AS(gcd_q(v), Error);
}

TEST_CASE("rational gcd against the PRS oracle") {
  oracle::Random rng(13);
  for (int t = 0; t < 300; ++t) {
    const IntPoly common = rng.relator(3, 5);
    std::vector<IntPoly> v;
    std::vector<oracle::ZVec> raw;
    const int n = rng.uniform(1, 4);
    for (int i = 0; i < n; ++i) {
      IntPoly f = rng.multiplier(4, 9) * common;
      if (f.is_zero()) f = common;
      v.push_back(f);
      raw.push_back(oracle::coeffs(f));
    }
    const RationalGcd g = gcd_q(v);
    const oracle::QVec expected = oracle::rational_gcd(raw);
    CHECK(std::vector<BigRat>(g.gamma.coeffs().begin(), g.gamma.coeffs().end()) == expected);
    CHECK(g.gamma.is_monic());
    // gamma divides every input, and the constructed common factor divides gamma
    for (const IntPoly& f : v) CHECK(divrem_q(to_rational(f), g.gamma).remainder.is_zero());
    CHECK(divrem_q(g.gamma, to_rational(common)).remainder.is_zero());
    RatPoly s;
    for (std::size_t i = 0; i < v.size(); ++i) s += g.bezout[i] * to_rational(v[i]);
    CHECK(s == g.gamma);
    BigInt l = 1;
    for (const RatPoly& b : g.bezout) l = lcm(l, denominator_lcm(b));
    CHECK(l == g.l);
  }
}

TEST_CASE("composition") {
  CHECK(compose(P("x^2"), P("x")) == P("x^2"));
  CHECK(compose(P("x^2 - x"), P("x^2")) == P("x^4 - x^2"));
  CHECK(compose(P("x"), P("3x^3 + x")) == P("3x^3 + x"));
  oracle::Random rng(17);
  for (int t = 0; t < 200; ++t) {
    IntPoly a = rng.relator(4, 9), b = rng.relator(3, 9);
    a.set_coeff(a.degree() + 1, 1);
    b.set_coeff(b.degree() + 1, 1);
    const IntPoly c = compose(a, b);
    CHECK(c.is_monic());
    CHECK(c.has_zero_constant());
    CHECK(c.degree() == a.degree() * b.degree());
  }
}

TEST_CASE("exact division") {
  IntPoly q;
  CHECK(divides_exactly(P("x^2 - x"), P("x^4 - x^2"), &q));
  CHECK(q == IntPoly{0, 1, 1});
  CHECK_FALSE(divides_exactly(P("2x"), P("x^2")));
}

TEST_CASE("text form") {
  CHECK(to_string(P("2x^3 - 4x")) == "2x^3 - 4x");
  CHECK(to_string(P("-x^2 + x")) == "-x^2 + x");
  CHECK(to_string(IntPoly{}) == "0");
  CHECK(to_string(R({0, BigRat(1, 2), 1})) == "x^2 + (1/2)x");
}

namespace {

struct Mod {
  int q;
  int zero() const { return 0; }
  int add(int a, int b) const { return (a + b) % q; }
  int mul(int a, int b) const { return a * b % q; }
  int scale(const BigInt& n, int a) const {
    BigInt r = n * a % q;
    if (r < 0) r += q;
    return static_cast<int>(r.get_si());
  }
};

}  // namespace

TEST_CASE("evaluation in a ring without unit") {
  CHECK(evaluate_mod(IntPoly{}, 5, Mod{7}) == 0);
  CHECK(evaluate_mod(P("x^2 - x"), 1, Mod{7}) == 0);
  CHECK(evaluate_mod(P("2x"), 1, Mod{2}) == 0);
  CHECK(evaluate_mod(P("3x^3 + x^2 - 5x"), 4, Mod{11}) == ((3 * 64 + 16 - 20) % 11 + 11) % 11);
  CHECK_THROWS_AS(evaluate_mod(IntPoly{1, 1}, 1, Mod{3}), Error);
}
