#include "monosep/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "monosep/finite_ring.hpp"
#include "monosep/invariants.hpp"
#include "monosep/json_io.hpp"
#include "monosep/parse.hpp"
#include "monosep/separability.hpp"

namespace monosep::cli {

std::vector<IntPoly> read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open presentation file '" + path + "'");
  std::vector<IntPoly> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_int_poly(line));
    } catch (const Error& e) {
      throw Error(e.kind(), path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

namespace {

struct Options {
  std::vector<std::string> relators;
  std::string file;
  bool json = false;
  std::string poly;
  std::string modulus = "2";
  std::string target;
  std::vector<std::string> generators;
  std::string bound = "64";
  std::uint64_t max_carrier = std::uint64_t{1} << 22;
  int degree_bound = 0;
  bool strict = false;
  std::string input;
};

Presentation load_presentation(const Options& o, std::ostream& err) {
  std::vector<IntPoly> rel;
  for (const std::string& r : o.relators) {
    IntPoly p = parse_int_poly(r);
    if (p.is_zero()) err << "warning: relator '" << r << "' is zero and was dropped\n";
    rel.push_back(std::move(p));
  }
  if (!o.file.empty()) {
    for (IntPoly& p : read_presentation_file(o.file)) {
      if (p.is_zero()) err << "warning: a zero relator in '" << o.file << "' was dropped\n";
      rel.push_back(std::move(p));
    }
  }
  return Presentation(std::move(rel));
}

std::string relator_list(const Presentation& p) {
  if (p.empty()) return "(none)";
  std::string s;
  for (const IntPoly& f : p.relators()) {
    if (!s.empty()) s += ", ";
    s += to_string(f);
  }
  return s;
}

std::string element_text(const FiniteRing& r, const FiniteRing::Element& e) { return to_string(r.lift(e)); }

void print_relation(std::ostream& out, const std::string& label, const MonicRelation& rel) {
  out << label << rel.k.get_str() << " * (" << to_string(rel.phi) << ") in V\n";
}

std::string theorem_form(const TheoremWitness& w) {
  std::ostringstream os;
  if (w.k != 1) os << w.k.get_str();
  os << "(a";
  if (w.degree > 1) os << "^" << w.degree;
  for (std::size_t i = 0; i < w.tail.size(); ++i) {
    const int power = w.degree - 1 - static_cast<int>(i);
    const BigInt& c = w.tail[i];
    if (c == 0) continue;
    os << (c < 0 ? " - " : " + ");
    if (abs(c) != 1) os << BigInt(abs(c)).get_str();
    os << "a";
    if (power > 1) os << "^" << power;
  }
  os << ") = 0";
  return os.str();
}

int cmd_decide(const Options& o, std::ostream& out, std::ostream& err) {
  const Presentation p = load_presentation(o, err);
  const SeparabilityVerdict v = decide(p);
  if (o.json) {
    Json doc = document("decide", p);
    doc["verdict"] = to_json(v);
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "relators: " << relator_list(p) << "\n";
  out << "verdict: " << (v.separable ? "separable" : "NOT separable") << "\n";
  if (v.failure) {
    out << "reason: " << to_string(v.failure->kind);
    if (v.failure->kind == FailureKind::NonSquarefreeGcd) out << "(" << v.failure->prime.get_str() << ")";
    if (v.failure->kind == FailureKind::NonIntegerGamma)
      out << "(coefficient of x^" << v.failure->coefficient_index << " is " << v.failure->value.get_str() << ")";
    out << "\n";
  }
  if (v.squarefree_witness) {
    out << "coefficient gcd: " << v.coefficient_gcd.get_str()
        << (v.squarefree_witness->is_squarefree ? " (squarefree)" : " (not squarefree)") << "\n";
  }
  if (v.rational_gcd) {
    out << "rational gcd: " << to_string(v.rational_gcd->gamma) << " (l = " << v.rational_gcd->l.get_str() << ")\n";
  }
  if (v.positive_witness) print_relation(out, "witness: ", *v.positive_witness);
  return 0;
}

int cmd_invariants(const Options& o, std::ostream& out, std::ostream& err) {
  const Presentation p = load_presentation(o, err);
  TorsionOptions topt;
  if (o.degree_bound > 0) topt.degree_bound = o.degree_bound;
  topt.strict = o.strict;
  const RingInvariants inv = ring_invariants(p, topt);
  if (o.json) {
    Json doc = document("invariants", p);
    doc["invariants"] = to_json(inv);
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "relators: " << relator_list(p) << "\n";
  if (!inv.minimal_polynomial) {
    out << "algebraic degree: infinite (a is transcendental)\n";
  } else {
    out << "algebraic degree: " << *inv.algebraic_degree << "\n";
    out << "minimal polynomial: " << to_string(*inv.minimal_polynomial) << " = " << inv.minimal_content.get_str()
        << " * (" << to_string(inv.minimal_primitive) << ")\n";
  }
  const TorsionData& t = inv.torsion;
  out << "integer torsion: " << (t.tau ? t.tau->get_str() : "infinite") << " (degree bound " << t.degree_bound << ")\n";
  out << "torsion exponent: " << (t.exponent ? std::to_string(*t.exponent) : "infinite") << "\n";
  if (t.tau_witness) print_relation(out, "torsion witness: ", *t.tau_witness);
  if (t.exponent_witness) print_relation(out, "exponent witness: ", *t.exponent_witness);
  return 0;
}

int cmd_basis(const Options& o, std::ostream& out, std::ostream& err) {
  const Presentation p = load_presentation(o, err);
  const CanonicalBasis b = canonical_basis(p);
  if (o.json) {
    Json doc = document("basis", p);
    doc["basis"] = to_json(b);
    out << doc.dump(2) << "\n";
    return 0;
  }
  if (b.empty()) out << "(empty basis)\n";
  for (const BasisElement& e : b.elements()) out << to_string(e.poly) << "\n";
  return 0;
}

int cmd_nf(const Options& o, std::ostream& out, std::ostream& err) {
  const Presentation p = load_presentation(o, err);
  const IntPoly g = parse_int_poly(o.poly);
  const CanonicalBasis b = canonical_basis(p);
  const Reduction r = reduce(g, b);
  if (o.json) {
    Json doc = document("nf", p);
    doc["poly"] = to_json(g);
    doc["normal_form"] = to_json(r.remainder);
    doc["certificate"] = to_json(b.lift(r.quotients, g - r.remainder));
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << to_string(r.remainder) << "\n";
  return 0;
}

int cmd_member(const Options& o, std::ostream& out, std::ostream& err) {
  const Presentation p = load_presentation(o, err);
  const IntPoly g = parse_int_poly(o.poly);
  const MembershipResult m = membership(g, p);
  if (o.json) {
    Json doc = document("member", p);
    doc["poly"] = to_json(g);
    doc["member"] = m.member;
    doc["certificate"] = m.certificate ? to_json(*m.certificate) : Json(nullptr);
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "member: " << (m.member ? "true" : "false") << "\n";
  if (m.certificate) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      out << "  cofactor of (" << to_string(p.relators()[i]) << "): " << to_string(m.certificate->cofactors[i]) << "\n";
    }
  }
  return 0;
}

int cmd_quotient(const Options& o, std::ostream& out, std::ostream& err) {
  const Presentation p = load_presentation(o, err);
  const QuotientResult q = build_quotient(p, BigInt(o.modulus));
  if (o.json) {
    Json doc = document("quotient", p);
    doc["quotient"] = to_json(q);
    out << doc.dump(2) << "\n";
    return 0;
  }
  if (const auto* inf = std::get_if<InfiniteQuotient>(&q)) {
    out << "modulus: " << inf->modulus.get_str() << "\ninfinite quotient: no basis element has a unit leading coefficient\n";
    out << "ladder:";
    for (const auto& [d, c] : inf->ladder) out << " (" << d << ", " << c.get_str() << ")";
    out << "\n";
    return 0;
  }
  const auto& r = std::get<FiniteRing>(q);
  out << "modulus: " << r.modulus().get_str() << "\n";
  out << "carrier size: " << r.carrier_size().get_str() << "\n";
  out << "standard monomials:";
  const auto mono = r.standard_monomials();
  for (std::size_t i = 0; i < mono.size(); ++i) out << " x^" << mono[i] << " (mod " << r.coefficient_moduli()[i] << ")";
  out << (mono.empty() ? " (none)\n" : "\n");
  const auto act = r.multiplication_action();
  for (std::size_t i = 0; i < mono.size(); ++i) {
    out << "  a * x^" << mono[i] << " = " << element_text(r, act[i]) << "\n";
  }
  return 0;
}

int cmd_separate(const Options& o, std::ostream& out, std::ostream& err) {
  const Presentation p = load_presentation(o, err);
  const IntPoly target = parse_int_poly(o.target);
  std::vector<IntPoly> gens;
  for (const std::string& g : o.generators) gens.push_back(parse_int_poly(g));
  SeparationOptions sopt;
  sopt.max_carrier = o.max_carrier;
  const SeparationResult r = separate(p, target, gens, BigInt(o.bound), sopt);
  if (o.json) {
    Json doc = document("separate", p);
    doc["target"] = to_json(target);
    Json g = Json::array();
    for (const IntPoly& x : gens) g.push_back(to_json(x));
    doc["generators"] = g;
    doc["result"] = to_json(r);
    out << doc.dump(2) << "\n";
    return 0;
  }
  if (!r.found) {
    out << "no separating quotient Z<a>/(V + qK) for q <= " << r.bound_exhausted->get_str() << "\n";
    return 0;
  }
  const FiniteRing& ring = *r.quotient;
  out << "separated at q = " << ring.modulus().get_str() << " (carrier size " << ring.carrier_size().get_str() << ")\n";
  out << "image of target: " << element_text(ring, r.image_of_target) << "\n";
  out << "subring image (" << r.subring_image.size() << " elements):";
  for (const auto& e : r.subring_image) out << " " << element_text(ring, e);
  out << "\n";
  return 0;
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
  const Presentation p = load_presentation(o, err);
  const SeparabilityVerdict v = decide(p);
  if (o.json) {
    Json doc = document("witness", p);
    doc["verdict"] = to_json(v);
    if (v.separable) {
      const TheoremWitness w = witness_theorem_part1(v);
      doc["witness"] = to_json(w);
      doc["torsion_split"] = w.k > 1 ? to_json(torsion_split(w.k)) : Json(nullptr);
    }
    out << doc.dump(2) << "\n";
    return 0;
  }
  if (!v.separable) {
    out << "not separable: no witness of the form k(a^n + ...) = 0 with squarefree k\n";
    return 0;
  }
  const TheoremWitness w = witness_theorem_part1(v);
  out << theorem_form(w) << "\n";
  if (w.k > 1) {
    const TorsionSplit s = torsion_split(w.k);
    out << "torsion split:";
    for (const TorsionPart& part : s.parts) out << " (" << part.prime.get_str() << ", " << part.cofactor.get_str() << ")";
    out << "\nbezout:";
    for (const BigInt& z : s.bezout) out << " " << z.get_str();
    out << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Json doc;
  if (o.input == "-") {
    doc = Json::parse(std::cin);
  } else {
    std::ifstream in(o.input);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + o.input + "'");
    doc = Json::parse(in);
  }
  const VerifyReport rep = verify_document(doc);
  if (o.json) {
    out << Json{{"schema", kSchema}, {"command", "verify"}, {"ok", rep.ok}, {"checks", rep.checks}}.dump(2) << "\n";
  } else {
    for (const std::string& c : rep.checks) out << c << "\n";
    out << (rep.ok ? "verified" : "REJECTED") << "\n";
  }
  return rep.ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite separability of monogenic rings Z<a | f_1(a) = 0, ..., f_m(a) = 0>", "monosep"};
  app.require_subcommand(1);
  Options o;

  auto presentation_opts = [&](CLI::App* sub) {
    sub->add_option("-r,--relator", o.relators, "Relator polynomial in x without constant term (repeatable)");
    sub->add_option("-f,--file", o.file, "Presentation file, one polynomial per line, '#' comments");
    sub->add_flag("--json", o.json, "Machine-readable output");
  };

  auto* decide_cmd = app.add_subcommand("decide", "Decide finite separability with certificates");
  presentation_opts(decide_cmd);
  auto* inv_cmd = app.add_subcommand("invariants", "Algebraic degree, minimal polynomial, torsion invariants");
  presentation_opts(inv_cmd);
  inv_cmd->add_option("--degree-bound", o.degree_bound, "Degree bound for the monic-relation search");
  inv_cmd->add_flag("--strict", o.strict, "Scan every k <= d rather than only divisors of d");
  auto* basis_cmd = app.add_subcommand("basis", "Canonical strong basis of the relator ideal");
  presentation_opts(basis_cmd);
  auto* nf_cmd = app.add_subcommand("nf", "Normal form of a polynomial");
  presentation_opts(nf_cmd);
  nf_cmd->add_option("-p,--poly", o.poly, "Polynomial to reduce")->required();
  auto* member_cmd = app.add_subcommand("member", "Ideal membership with a cofactor certificate");
  presentation_opts(member_cmd);
  member_cmd->add_option("-p,--poly", o.poly, "Polynomial to test")->required();
  auto* quot_cmd = app.add_subcommand("quotient", "Finite quotient Z<a>/(V + qK)");
  presentation_opts(quot_cmd);
  quot_cmd->add_option("-q,--modulus", o.modulus, "Modulus q >= 2")->required();
  auto* sep_cmd = app.add_subcommand("separate", "Search a finite quotient separating target from a subring");
  presentation_opts(sep_cmd);
  sep_cmd->add_option("-t,--target", o.target, "Target element")->required();
  sep_cmd->add_option("-g,--gen", o.generators, "Subring generator (repeatable)");
  sep_cmd->add_option("-b,--bound", o.bound, "Largest modulus to try");
  sep_cmd->add_option("--max-carrier", o.max_carrier, "Skip quotients with more elements than this");
  auto* wit_cmd = app.add_subcommand("witness", "Relation k(a^n + k_1 a^(n-1) + ... + k_(n-1) a) = 0");
  presentation_opts(wit_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "Re-verify certificates in a --json document");
  verify_cmd->add_option("-i,--input", o.input, "JSON document ('-' for stdin)")->required();
  verify_cmd->add_flag("--json", o.json, "Machine-readable output");

  std::vector<std::string> argv_store{"monosep"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (decide_cmd->parsed()) return cmd_decide(o, out, err);
    if (inv_cmd->parsed()) return cmd_invariants(o, out, err);
    if (basis_cmd->parsed()) return cmd_basis(o, out, err);
    if (nf_cmd->parsed()) return cmd_nf(o, out, err);
    if (member_cmd->parsed()) return cmd_member(o, out, err);
    if (quot_cmd->parsed()) return cmd_quotient(o, out, err);
    if (sep_cmd->parsed()) return cmd_separate(o, out, err);
    if (wit_cmd->parsed()) return cmd_witness(o, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
  } catch (const SyntaxError& e) {
    err << "error: syntax error at offset " << e.position() << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON document: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace monosep::cli
