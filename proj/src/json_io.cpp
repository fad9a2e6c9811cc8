#include "monosep/json_io.hpp"

#include <algorithm>
#include <set>

#include "monosep/parse.hpp"

namespace monosep {

namespace {

Json big(const BigInt& v) { return v.get_str(); }

BigInt big_from(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error(ErrorKind::InvalidInput, "expected an integer (number or decimal string)");
}

Json element_json(const FiniteRing::Element& e) {
  Json a = Json::array();
  for (std::int64_t v : e) a.push_back(v);
  return a;
}

Json poly_list(std::span<const IntPoly> ps) {
  Json a = Json::array();
  for (const IntPoly& p : ps) a.push_back(to_json(p));
  return a;
}

}  // namespace

Json to_json(const IntPoly& p) {
  Json c = Json::array();
  for (const BigInt& v : p.coeffs()) c.push_back(big(v));
  return {{"text", to_string(p)}, {"coefficients", c}};
}

Json to_json(const RatPoly& p) {
  Json c = Json::array();
  for (const BigRat& v : p.coeffs()) c.push_back(v.get_str());
  return {{"text", to_string(p)}, {"coefficients", c}};
}

Json to_json(const MembershipCertificate& c) {
  return {{"claim", to_json(c.claim)}, {"cofactors", poly_list(c.cofactors)}};
}

Json to_json(const MonicRelation& r) {
  return {{"k", big(r.k)}, {"phi", to_json(r.phi)}, {"certificate", to_json(r.certificate)}};
}

Json to_json(const SquarefreeWitness& w) {
  Json f = Json::array();
  for (const PrimePower& pp : w.factorization) f.push_back({{"prime", big(pp.prime)}, {"exponent", pp.exponent}});
  Json j = {{"is_squarefree", w.is_squarefree}, {"factorization", f}};
  j["offending_prime"] = w.offending_prime ? Json(big(*w.offending_prime)) : Json(nullptr);
  return j;
}

Json to_json(const RationalGcd& g) {
  Json b = Json::array();
  for (const RatPoly& p : g.bezout) b.push_back(to_json(p));
  return {{"gamma", to_json(g.gamma)}, {"bezout", b}, {"l", big(g.l)}};
}

Json to_json(const SeparabilityVerdict& v) {
  Json j;
  j["separable"] = v.separable;
  j["coefficient_gcd"] = big(v.coefficient_gcd);
  j["squarefree_witness"] = v.squarefree_witness ? to_json(*v.squarefree_witness) : Json(nullptr);
  j["rational_gcd"] = v.rational_gcd ? to_json(*v.rational_gcd) : Json(nullptr);
  j["combined_relator"] = to_json(v.combined_relator);
  if (v.failure) {
    Json f = {{"kind", std::string(to_string(v.failure->kind))}};
    if (v.failure->kind == FailureKind::NonSquarefreeGcd) f["prime"] = big(v.failure->prime);
    if (v.failure->kind == FailureKind::NonIntegerGamma) {
      f["coefficient_index"] = v.failure->coefficient_index;
      f["value"] = v.failure->value.get_str();
    }
    j["failure_reason"] = f;
  } else {
    j["failure_reason"] = nullptr;
  }
  j["positive_witness"] = v.positive_witness ? to_json(*v.positive_witness) : Json(nullptr);
  return j;
}

Json to_json(const TheoremWitness& w) {
  Json tail = Json::array();
  for (const BigInt& c : w.tail) tail.push_back(big(c));
  return {{"k", big(w.k)}, {"n", w.degree}, {"tail", tail}};
}

Json to_json(const TorsionSplit& s) {
  Json parts = Json::array();
  for (const TorsionPart& p : s.parts) parts.push_back({{"prime", big(p.prime)}, {"cofactor", big(p.cofactor)}});
  Json z = Json::array();
  for (const BigInt& c : s.bezout) z.push_back(big(c));
  return {{"k", big(s.k)}, {"parts", parts}, {"bezout", z}};
}

Json to_json(const TorsionData& t) {
  Json j;
  j["tau"] = t.tau ? Json(big(*t.tau)) : Json("infinite");
  j["exponent"] = t.exponent ? Json(*t.exponent) : Json("infinite");
  j["degree_bound"] = t.degree_bound;
  j["primitive_part_monic"] = t.primitive_part_monic;
  j["tau_witness"] = t.tau_witness ? to_json(*t.tau_witness) : Json(nullptr);
  j["exponent_witness"] = t.exponent_witness ? to_json(*t.exponent_witness) : Json(nullptr);
  return j;
}

Json to_json(const RingInvariants& inv) {
  Json j;
  j["algebraic_degree"] = inv.algebraic_degree ? Json(*inv.algebraic_degree) : Json("infinite");
  j["minimal_polynomial"] = inv.minimal_polynomial ? to_json(*inv.minimal_polynomial) : Json(nullptr);
  j["minimal_content"] = big(inv.minimal_content);
  j["minimal_primitive"] = inv.minimal_polynomial ? to_json(inv.minimal_primitive) : Json(nullptr);
  j["torsion"] = to_json(inv.torsion);
  return j;
}

Json to_json(const CanonicalBasis& b) {
  Json elems = Json::array();
  for (const BasisElement& e : b.elements()) {
    elems.push_back({{"poly", to_json(e.poly)}, {"cofactors", poly_list(e.cofactors)}});
  }
  Json back = Json::array();
  for (const auto& row : b.relator_certificates()) back.push_back(poly_list(row));
  return {{"elements", elems}, {"relator_certificates", back}};
}

Json to_json(const QuotientResult& q) {
  if (const auto* inf = std::get_if<InfiniteQuotient>(&q)) {
    Json ladder = Json::array();
    for (const auto& [d, c] : inf->ladder) ladder.push_back({{"degree", d}, {"leading_coefficient", big(c)}});
    return {{"finite", false}, {"modulus", big(inf->modulus)}, {"ladder", ladder}};
  }
  const auto& r = std::get<FiniteRing>(q);
  Json action = Json::array();
  const auto mono = r.standard_monomials();
  const auto act = r.multiplication_action();
  for (std::size_t i = 0; i < mono.size(); ++i) {
    action.push_back({{"monomial", mono[i]}, {"a_times_monomial", element_json(act[i])}});
  }
  return {{"finite", true},
          {"modulus", big(r.modulus())},
          {"standard_monomials", mono},
          {"coefficient_moduli", std::vector<std::int64_t>(r.coefficient_moduli().begin(), r.coefficient_moduli().end())},
          {"carrier_size", big(r.carrier_size())},
          {"multiplication", action}};
}

Json to_json(const SeparationResult& r) {
  Json j;
  j["found"] = r.found;
  if (r.found) {
    j["modulus"] = big(r.quotient->modulus());
    j["quotient"] = to_json(QuotientResult(*r.quotient));
    j["image_of_target"] = element_json(r.image_of_target);
    Json sub = Json::array();
    for (const auto& e : r.subring_image) sub.push_back(element_json(e));
    j["subring_image"] = sub;
  }
  j["bound_exhausted"] = r.bound_exhausted ? Json(big(*r.bound_exhausted)) : Json(nullptr);
  Json tried = Json::array();
  for (const BigInt& q : r.moduli_tried) tried.push_back(big(q));
  j["moduli_tried"] = tried;
  Json skipped = Json::array();
  for (const BigInt& q : r.moduli_skipped) skipped.push_back(big(q));
  j["moduli_skipped"] = skipped;
  return j;
}

IntPoly int_poly_from_json(const Json& j) {
  if (j.is_string()) return parse_int_poly(j.get<std::string>());
  if (!j.is_object() || !j.contains("coefficients"))
    throw Error(ErrorKind::InvalidInput, "polynomial must be an object with \"coefficients\"");
  std::vector<BigInt> c;
  for (const Json& v : j.at("coefficients")) c.push_back(big_from(v));
  return IntPoly(std::move(c));
}

RatPoly rat_poly_from_json(const Json& j) {
  std::vector<BigRat> c;
  for (const Json& v : j.at("coefficients")) {
    BigRat r(v.get<std::string>());
    r.canonicalize();
    c.push_back(r);
  }
  return RatPoly(std::move(c));
}

MembershipCertificate certificate_from_json(const Json& j) {
  MembershipCertificate c;
  c.claim = int_poly_from_json(j.at("claim"));
  for (const Json& p : j.at("cofactors")) c.cofactors.push_back(int_poly_from_json(p));
  return c;
}

Json document(const std::string& command, const Presentation& p) {
  return {{"schema", kSchema}, {"command", command}, {"relators", poly_list(p.relators())}};
}

bool verify_separation(const Presentation& p, const IntPoly& target, std::span<const IntPoly> generators,
                       const BigInt& modulus) {
  QuotientResult qr = build_quotient(p, modulus);
  const auto* ring = std::get_if<FiniteRing>(&qr);
  if (!ring) return false;
  const FiniteRing::Element a = ring->generator();
  const FiniteRing::Element t = evaluate_mod(target, a, *ring);
  std::set<FiniteRing::Element> closure{ring->zero()};
  std::vector<FiniteRing::Element> frontier;
  for (const IntPoly& g : generators) {
    auto img = evaluate_mod(g, a, *ring);
    if (closure.insert(img).second) frontier.push_back(img);
  }
  while (!frontier.empty()) {
    std::vector<FiniteRing::Element> next;
    const std::vector<FiniteRing::Element> current(closure.begin(), closure.end());
    for (const auto& x : frontier) {
      auto n = ring->neg(x);
      if (closure.insert(n).second) next.push_back(n);
      for (const auto& y : current) {
        for (auto z : {ring->add(x, y), ring->mul(x, y)}) {
          if (closure.insert(z).second) next.push_back(std::move(z));
        }
      }
    }
    frontier = std::move(next);
  }
  return !closure.contains(t);
}

VerifyReport verify_document(const Json& doc) {
  VerifyReport rep;
  auto check = [&](bool ok, const std::string& what) {
    rep.checks.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    return ok;
  };
  if (doc.value("schema", "") != kSchema) {
    check(false, "schema tag is " + std::string(kSchema));
    return rep;
  }
  std::vector<IntPoly> rel;
  for (const Json& r : doc.at("relators")) rel.push_back(int_poly_from_json(r));
  const Presentation p(rel);
  const std::string cmd = doc.at("command").get<std::string>();
  bool ok = true;
  auto check_relation = [&](const Json& w, const std::string& label) {
    const BigInt k = big_from(w.at("k"));
    const IntPoly phi = int_poly_from_json(w.at("phi"));
    const MembershipCertificate c = certificate_from_json(w.at("certificate"));
    ok &= check(phi.is_monic() && phi.has_zero_constant(), label + ": phi is monic without constant term");
    ok &= check(c.claim == phi * k, label + ": certificate claims k * phi");
    ok &= check(verify_certificate(c, p), label + ": cofactors re-multiply to the claim");
  };

  if (cmd == "decide" || cmd == "witness") {
    const Json& v = doc.at("verdict");
    SeparabilityVerdict verdict;
    verdict.separable = v.at("separable").get<bool>();
    verdict.coefficient_gcd = big_from(v.at("coefficient_gcd"));
    if (!v.at("rational_gcd").is_null()) {
      RationalGcd g;
      g.gamma = rat_poly_from_json(v.at("rational_gcd").at("gamma"));
      for (const Json& b : v.at("rational_gcd").at("bezout")) g.bezout.push_back(rat_poly_from_json(b));
      g.l = big_from(v.at("rational_gcd").at("l"));
      verdict.rational_gcd = g;
    }
    if (!v.at("failure_reason").is_null()) {
      const Json& f = v.at("failure_reason");
      FailureReason r;
      const std::string kind = f.at("kind").get<std::string>();
      if (kind == "NonSquarefreeGcd") {
        r.kind = FailureKind::NonSquarefreeGcd;
        r.prime = big_from(f.at("prime"));
      } else if (kind == "NonIntegerGamma") {
        r.kind = FailureKind::NonIntegerGamma;
        r.coefficient_index = f.at("coefficient_index").get<std::size_t>();
        r.value = BigRat(f.at("value").get<std::string>());
        r.value.canonicalize();
      } else {
        r.kind = FailureKind::NoRelators;
      }
      verdict.failure = r;
    }
    if (!v.at("positive_witness").is_null()) {
      const Json& w = v.at("positive_witness");
      verdict.positive_witness =
          MonicRelation{big_from(w.at("k")), int_poly_from_json(w.at("phi")), certificate_from_json(w.at("certificate"))};
    }
    ok &= check(verify_verdict(verdict, p), std::string("verdict ") + (verdict.separable ? "separable" : "not separable") +
                                               " re-verified");
    if (doc.contains("witness") && !doc.at("witness").is_null()) {
      const Json& w = doc.at("witness");
      const BigInt k = big_from(w.at("k"));
      const int n = w.at("n").get<int>();
      IntPoly phi = IntPoly::monomial(BigInt(1), n);
      const Json& tail = w.at("tail");
      for (std::size_t i = 0; i < tail.size(); ++i) phi.set_coeff(n - 1 - i, big_from(tail[i]));
      ok &= check(static_cast<int>(tail.size()) == n - 1 && phi.has_zero_constant(), "witness has n - 1 tail coefficients");
      ok &= check(squarefree(k).is_squarefree, "witness k = " + k.get_str() + " is squarefree");
      ok &= check(membership(phi * k, p).member, "witness k * phi lies in V");
    }
    if (doc.contains("torsion_split") && !doc.at("torsion_split").is_null()) {
      const Json& s = doc.at("torsion_split");
      const BigInt k = big_from(s.at("k"));
      BigInt prod = 1, combo = 0;
      bool parts_ok = s.at("parts").size() == s.at("bezout").size();
      for (std::size_t i = 0; parts_ok && i < s.at("parts").size(); ++i) {
        const BigInt q = big_from(s.at("parts")[i].at("prime"));
        const BigInt c = big_from(s.at("parts")[i].at("cofactor"));
        parts_ok &= mpz_probab_prime_p(q.get_mpz_t(), 30) != 0 && q * c == k;
        prod *= q;
        combo += big_from(s.at("bezout")[i]) * c;
      }
      ok &= check(parts_ok && prod == k && combo == 1, "torsion split: primes multiply to k, Bezout sums to 1");
    }
    if (verdict.rational_gcd) {
      const RationalGcd& g = *verdict.rational_gcd;
      RatPoly lg = g.gamma * BigRat(g.l);
      bool integral = true;
      for (const BigRat& c : lg.coeffs()) integral &= is_integer(c);
      if (integral) {
        ok &= check(membership(to_integer(lg), p).member, "l * gamma lies in V");
      }
    }
  } else if (cmd == "member") {
    const bool member = doc.at("member").get<bool>();
    if (member) {
      const MembershipCertificate c = certificate_from_json(doc.at("certificate"));
      ok &= check(c.claim == int_poly_from_json(doc.at("poly")), "certificate claims the queried polynomial");
      ok &= check(verify_certificate(c, p), "membership cofactors re-multiply");
    } else {
      ok &= check(!normal_form(int_poly_from_json(doc.at("poly")), canonical_basis(p)).is_zero(),
                  "non-member has nonzero normal form");
    }
  } else if (cmd == "nf") {
    const IntPoly g = int_poly_from_json(doc.at("poly"));
    const IntPoly nf = int_poly_from_json(doc.at("normal_form"));
    const MembershipCertificate c = certificate_from_json(doc.at("certificate"));
    ok &= check(c.claim == g - nf, "certificate claims g - nf(g)");
    ok &= check(verify_certificate(c, p), "cofactors re-multiply to g - nf(g)");
    ok &= check(normal_form(nf, canonical_basis(p)) == nf, "normal form is fully reduced");
  } else if (cmd == "basis") {
    const Json& b = doc.at("basis");
    std::vector<IntPoly> polys;
    for (const Json& e : b.at("elements")) {
      MembershipCertificate c;
      c.claim = int_poly_from_json(e.at("poly"));
      for (const Json& f : e.at("cofactors")) c.cofactors.push_back(int_poly_from_json(f));
      ok &= check(verify_certificate(c, p), "basis element " + to_string(c.claim) + " lies in V");
      polys.push_back(c.claim);
    }
    const Presentation listed(polys);
    bool back = b.at("relator_certificates").size() == p.size();
    for (std::size_t i = 0; back && i < p.size(); ++i) {
      MembershipCertificate c;
      c.claim = p.relators()[i];
      for (const Json& f : b.at("relator_certificates")[i]) c.cofactors.push_back(int_poly_from_json(f));
      back &= verify_certificate(c, listed);
    }
    ok &= check(back, "every relator is a combination of the basis");
  } else if (cmd == "quotient") {
    const Json& q = doc.at("quotient");
    ok &= check(to_json(build_quotient(p, big_from(q.at("modulus")))) == q, "quotient recomputed identically");
  } else if (cmd == "invariants") {
    const Json& t = doc.at("invariants").at("torsion");
    if (!t.at("tau_witness").is_null()) check_relation(t.at("tau_witness"), "tau witness");
    if (!t.at("exponent_witness").is_null()) check_relation(t.at("exponent_witness"), "exponent witness");
    const Json& mp = doc.at("invariants").at("minimal_polynomial");
    if (!mp.is_null()) ok &= check(membership(int_poly_from_json(mp), p).member, "minimal polynomial lies in V");
  } else if (cmd == "separate") {
    const Json& r = doc.at("result");
    if (r.at("found").get<bool>()) {
      std::vector<IntPoly> gens;
      for (const Json& g : doc.at("generators")) gens.push_back(int_poly_from_json(g));
      ok &= check(verify_separation(p, int_poly_from_json(doc.at("target")), gens, big_from(r.at("modulus"))),
                  "target image lies outside the recomputed subring image");
    } else {
      check(true, "no separation claimed");
    }
  } else {
    ok &= check(false, "command '" + cmd + "' carries no certificate");
  }
  rep.ok = ok;
  return rep;
}

}  // namespace monosep
