#include <algorithm>

#include "doctest.h"
#include "monosep/error.hpp"
#include "monosep/invariants.hpp"
#include "monosep/separability.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace monosep;

TEST_CASE("decision examples") {
  auto v = decide(pres({"x^2 - x"}));
  CHECK(v.separable);
  CHECK(v.coefficient_gcd == 1);
  CHECK(v.rational_gcd->gamma == to_rational(P("x^2 - x")));
  CHECK(v.positive_witness->phi == P("x^2 - x"));

  v = decide(pres({"4x"}));
  CHECK_FALSE(v.separable);
  CHECK(v.failure->kind == FailureKind::NonSquarefreeGcd);
  CHECK(v.failure->prime == 2);

  v = decide(pres({"2x^2 + x"}));
  CHECK_FALSE(v.separable);
  CHECK(v.failure->kind == FailureKind::NonIntegerGamma);
  CHECK(v.failure->coefficient_index == 1);
  CHECK(v.failure->value == BigRat(1, 2));

  v = decide(pres({"x^3 - x", "6x^2 - 6x"}));
  CHECK(v.separable);
  CHECK(v.coefficient_gcd == 1);
  CHECK(v.rational_gcd->gamma == to_rational(P("x^2 - x")));

  v = decide(pres({"4x^2 + 2x", "2x^3 + x^2"}));
  CHECK_FALSE(v.separable);
  CHECK(v.coefficient_gcd == 1);
  CHECK(v.failure->kind == FailureKind::NonIntegerGamma);
  CHECK(v.rational_gcd->gamma == R({0, BigRat(1, 2), 1}));

  v = decide(Presentation());
  CHECK_FALSE(v.separable);
  CHECK(v.failure->kind == FailureKind::NoRelators);
}

TEST_CASE("combined relator carries the overall content") {
  const Presentation p = pres({"6x^2 + 4x", "10x", "15x^3"});
  const IntPoly g = combined_relator(p);
  CHECK(g == P("6x^2 + 4x") + P("10x") * P("x^2") + P("15x^3") * P("x^3"));
  CHECK(content(g) == 1);
}

TEST_CASE("theorem witnesses") {
  auto w = witness_theorem_part1(decide(pres({"x^2 - x"})));
  CHECK(w.k == 1);
  CHECK(w.degree == 2);
  CHECK(w.tail == std::vector<BigInt>{-1});
  w = witness_theorem_part1(decide(pres({"2x^2"})));
  CHECK(w.k == 2);
  CHECK(w.degree == 2);
  CHECK(w.tail == std::vector<BigInt>{0});
  w = witness_theorem_part1(decide(pres({"6x^3 - 6x", "x^4 - x^2"})));
  CHECK(w.k == 1);
  CHECK(w.degree == 4);
  CHECK_THROWS_AS(witness_theorem_part1(decide(pres({"4x"}))), Error);
}

TEST_CASE("torsion split") {
  auto s = torsion_split(6);
  REQUIRE(s.parts.size() == 2);
  CHECK(s.parts[0].prime == 2);
  CHECK(s.parts[0].cofactor == 3);
  CHECK(s.parts[1].prime == 3);
  CHECK(s.parts[1].cofactor == 2);
  CHECK(3 * s.bezout[0] + 2 * s.bezout[1] == 1);
  s = torsion_split(2);
  REQUIRE(s.parts.size() == 1);
  CHECK(s.bezout == std::vector<BigInt>{1});
  s = torsion_split(30);
  REQUIRE(s.parts.size() == 3);
  CHECK(15 * s.bezout[0] + 10 * s.bezout[1] + 6 * s.bezout[2] == 1);
  CHECK_THROWS_AS(torsion_split(12), Error);
  CHECK_THROWS_AS(torsion_split(1), Error);
  CHECK_THROWS_AS(torsion_split(0), Error);
}

TEST_CASE("decisions agree with the oracle and re-verify") {
  oracle::Random rng(41);
  for (int t = 0; t < 300; ++t) {
    const Presentation p = rng.presentation(3, 6, 20);
    const SeparabilityVerdict v = decide(p);
    const oracle::Decision o = oracle::decide(p);
    CHECK(v.separable == o.separable);
    CHECK(v.coefficient_gcd == o.coefficient_gcd);
    CHECK(std::vector<BigRat>(v.rational_gcd->gamma.coeffs().begin(), v.rational_gcd->gamma.coeffs().end()) ==
          o.gamma);
    CHECK(verify_verdict(v, p));
    if (v.separable) {
      CHECK(v.positive_witness->k == v.coefficient_gcd);
      CHECK(oracle::certificate_holds(v.positive_witness->certificate, p));
      const TheoremWitness w = witness_theorem_part1(v);
      CHECK(squarefree(w.k).is_squarefree);
    }
  }
}

TEST_CASE("tampered verdicts are rejected") {
  const Presentation p = pres({"x^3 - x", "6x^2 - 6x"});
  SeparabilityVerdict v = decide(p);
  REQUIRE(verify_verdict(v, p));
  SeparabilityVerdict bad = v;
  bad.positive_witness->phi = P("x^2 - x");
  bad.positive_witness->certificate.claim = P("x^2 - x");
  CHECK_FALSE(verify_verdict(bad, p));
  bad = v;
  bad.separable = false;
  bad.failure = FailureReason{FailureKind::NonSquarefreeGcd, 2, 0, 0};
  CHECK_FALSE(verify_verdict(bad, p));
  const Presentation q = pres({"2x^2 + x"});
  bad = decide(q);
  bad.failure->coefficient_index = 2;
  CHECK_FALSE(verify_verdict(bad, q));
}

TEST_CASE("verdicts are invariant under redundant members and permutation") {
  oracle::Random rng(53);
  for (int t = 0; t < 150; ++t) {
    const Presentation p = rng.presentation(3, 5, 20);
    const SeparabilityVerdict v = decide(p);
    std::vector<IntPoly> more(p.relators().rbegin(), p.relators().rend());
    IntPoly extra;
    for (const IntPoly& f : p.relators()) extra += rng.multiplier(2, 5) * f;
    more.push_back(extra);
    const SeparabilityVerdict w = decide(Presentation(more));
    CHECK(v.separable == w.separable);
    CHECK(v.coefficient_gcd == w.coefficient_gcd);
    CHECK(v.rational_gcd->gamma == w.rational_gcd->gamma);
  }
}

TEST_CASE("integer torsion divides the witness multiplier") {
  oracle::Random rng(59);
  int seen = 0;
  for (int t = 0; t < 200; ++t) {
    const Presentation p = rng.presentation(3, 5, 20);
    const SeparabilityVerdict v = decide(p);
    if (!v.separable) continue;
    ++seen;
    const TorsionData td = torsion_data(p);
    REQUIRE(td.tau);
    CHECK(v.positive_witness->k % *td.tau == 0);
    CHECK(squarefree(*td.tau).is_squarefree);
  }
  CHECK(seen > 20);
}
