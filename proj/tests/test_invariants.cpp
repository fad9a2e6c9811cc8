#include "doctest.h"
#include "monosep/error.hpp"
#include "monosep/invariants.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace monosep;

TEST_CASE("minimal polynomial examples") {
  auto inv = ring_invariants(pres({"x^2 - x"}));
  CHECK(*inv.minimal_polynomial == P("x^2 - x"));
  CHECK(*inv.algebraic_degree == 2);
  inv = ring_invariants(pres({"2x^2", "x^3"}));
  CHECK(*inv.minimal_polynomial == P("2x^2"));
  CHECK(*inv.algebraic_degree == 2);
  CHECK(inv.minimal_content == 2);
  CHECK(inv.minimal_primitive == P("x^2"));
  inv = ring_invariants(Presentation());
  CHECK_FALSE(inv.minimal_polynomial);
  CHECK_FALSE(inv.algebraic_degree);
  CHECK_FALSE(inv.torsion.tau);
}

TEST_CASE("torsion examples") {
  auto t = torsion_data(pres({"x^2 - x"}));
  CHECK(*t.tau == 1);
  CHECK(*t.exponent == 2);
  CHECK(t.tau_witness->phi == P("x^2 - x"));
  t = torsion_data(pres({"4x"}));
  CHECK(*t.tau == 4);
  CHECK(*t.exponent == 1);
  CHECK(t.tau_witness->phi == P("x"));
  t = torsion_data(pres({"2x^2 + x"}));
  CHECK_FALSE(t.tau);
  CHECK_FALSE(t.exponent);
  CHECK(t.degree_bound == 4);
  t = torsion_data(pres({"2x^2", "x^3"}));
  CHECK(*t.tau == 1);
  CHECK(*t.exponent == 2);
  CHECK(t.exponent_witness->k == 2);
  CHECK_THROWS_AS(torsion_data(pres({"x"}), TorsionOptions{0, false}), Error);
}

TEST_CASE("strict scan agrees with the divisor scan") {
  oracle::Random rng(31);
  for (int t = 0; t < 80; ++t) {
    const Presentation p = rng.presentation(2, 4, 12);
    const auto a = torsion_data(p);
    const auto b = torsion_data(p, TorsionOptions{std::nullopt, true});
    CHECK(a.tau == b.tau);
    CHECK(a.exponent == b.exponent);
  }
}

TEST_CASE("random invariants") {
  oracle::Random rng(37);
  for (int t = 0; t < 150; ++t) {
    const Presentation p = rng.presentation(3, 5, 20);
    const CanonicalBasis b = canonical_basis(p);
    const RingInvariants inv = ring_invariants(b);
    REQUIRE(inv.minimal_polynomial);
    const IntPoly& m = *inv.minimal_polynomial;
    CHECK(inv.minimal_primitive * inv.minimal_content == m);
    CHECK(membership(m, b).member);

    // every constructed member becomes divisible by m after scaling
    IntPoly g;
    for (const IntPoly& f : p.relators()) g += rng.multiplier(3, 6) * f;
    if (!g.is_zero()) {
      const auto qr = divrem_q(to_rational(g), to_rational(m));
      CHECK(qr.remainder.is_zero());
      const BigInt k = denominator_lcm(qr.quotient);
      CHECK(divides_exactly(m, g * k));
    }

    // permuting relators and adding redundant members keeps m
    std::vector<IntPoly> shuffled(p.relators().rbegin(), p.relators().rend());
    shuffled.push_back(m * P("x^2 - 3x"));
    CHECK(*minimal_polynomial(Presentation(shuffled)) == m);

    const TorsionData& td = inv.torsion;
    if (td.tau) {
      CHECK(inv.minimal_primitive.is_monic());
      CHECK(td.primitive_part_monic);
      CHECK(inv.minimal_content % *td.tau == 0);
      CHECK(oracle::certificate_holds(td.tau_witness->certificate, p));
      CHECK(td.tau_witness->certificate.claim == td.tau_witness->phi * *td.tau);
      for (BigInt k = 1; k < *td.tau; ++k)
        if (*td.tau % k == 0) CHECK_FALSE(monic_multiple_search(b, k, td.degree_bound));
      CHECK(*td.exponent == *inv.algebraic_degree);
      CHECK(oracle::certificate_holds(td.exponent_witness->certificate, p));
    }
  }
}

TEST_CASE("extraction examples") {
  auto r = extract_monic_relation(pres({"x^2 - x"}), P("3x^2 - 3x"));
  CHECK(r.k == 3);
  CHECK(r.phi == P("x^2 - x"));
  const Presentation q = pres({"x^3 - x", "x^2 - x"});
  const IntPoly g = P("3x^3 - x^2 - 2x");
  CHECK(oracle::combine({IntPoly{2}, P("x")}, q.relators()) == oracle::coeffs(g));
  r = extract_monic_relation(q, g);
  CHECK(r.k == 1);
  CHECK(r.phi.degree() <= 3);
  CHECK(r.phi.is_monic());
  CHECK(oracle::certificate_holds(r.certificate, q));
  r = extract_monic_relation(pres({"2x^2", "x^3", "6x"}), P("6x"));
  CHECK(r.k == 6);
  CHECK(r.phi == P("x"));
}

TEST_CASE("extraction errors") {
  CHECK_THROWS_AS(extract_monic_relation(pres({"x^2 - x"}), P("x")), Error);
  CHECK_THROWS_AS(extract_monic_relation(pres({"x^2 - x"}), IntPoly{}), Error);
  try {
    extract_monic_relation(pres({"2x^2 + x"}), P("2x^2 + x"));
    FAIL("expected HypothesisUnmet");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisUnmet);
  }
}
