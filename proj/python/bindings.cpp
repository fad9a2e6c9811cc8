#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "monosep/cli.hpp"
#include "monosep/finite_ring.hpp"
#include "monosep/json_io.hpp"
#include "monosep/parse.hpp"

namespace py = pybind11;
using namespace monosep;

namespace {

Presentation presentation(const std::vector<std::string>& relators) {
  std::vector<IntPoly> polys;
  for (const std::string& r : relators) polys.push_back(parse_int_poly(r));
  return Presentation(std::move(polys));
}

std::string decide_json(const std::vector<std::string>& relators) {
  const Presentation p = presentation(relators);
  Json doc = document("decide", p);
  doc["verdict"] = to_json(decide(p));
  return doc.dump();
}

std::string invariants_json(const std::vector<std::string>& relators, int degree_bound, bool strict) {
  const Presentation p = presentation(relators);
  TorsionOptions opt;
  if (degree_bound > 0) opt.degree_bound = degree_bound;
  opt.strict = strict;
  Json doc = document("invariants", p);
  doc["invariants"] = to_json(ring_invariants(p, opt));
  return doc.dump();
}

std::string basis_json(const std::vector<std::string>& relators) {
  const Presentation p = presentation(relators);
  Json doc = document("basis", p);
  doc["basis"] = to_json(canonical_basis(p));
  return doc.dump();
}

std::string nf_json(const std::vector<std::string>& relators, const std::string& poly) {
  const Presentation p = presentation(relators);
  const IntPoly g = parse_int_poly(poly);
  const CanonicalBasis b = canonical_basis(p);
  const Reduction r = reduce(g, b);
  Json doc = document("nf", p);
  doc["poly"] = to_json(g);
  doc["normal_form"] = to_json(r.remainder);
  doc["certificate"] = to_json(b.lift(r.quotients, g - r.remainder));
  return doc.dump();
}

std::string member_json(const std::vector<std::string>& relators, const std::string& poly) {
  const Presentation p = presentation(relators);
  const IntPoly g = parse_int_poly(poly);
  const MembershipResult m = membership(g, p);
  Json doc = document("member", p);
  doc["poly"] = to_json(g);
  doc["member"] = m.member;
  doc["certificate"] = m.certificate ? to_json(*m.certificate) : Json(nullptr);
  return doc.dump();
}

std::string quotient_json(const std::vector<std::string>& relators, const std::string& modulus) {
  const Presentation p = presentation(relators);
  Json doc = document("quotient", p);
  doc["quotient"] = to_json(build_quotient(p, BigInt(modulus)));
  return doc.dump();
}

std::string separate_json(const std::vector<std::string>& relators, const std::string& target,
                          const std::vector<std::string>& generators, const std::string& bound) {
  const Presentation p = presentation(relators);
  const IntPoly t = parse_int_poly(target);
  std::vector<IntPoly> gens;
  for (const std::string& g : generators) gens.push_back(parse_int_poly(g));
  Json doc = document("separate", p);
  doc["target"] = to_json(t);
  Json g = Json::array();
  for (const IntPoly& x : gens) g.push_back(to_json(x));
  doc["generators"] = g;
  doc["result"] = to_json(separate(p, t, gens, BigInt(bound)));
  return doc.dump();
}

std::string witness_json(const std::vector<std::string>& relators) {
  const Presentation p = presentation(relators);
  const SeparabilityVerdict v = decide(p);
  Json doc = document("witness", p);
  doc["verdict"] = to_json(v);
  if (v.separable) {
    const TheoremWitness w = witness_theorem_part1(v);
    doc["witness"] = to_json(w);
    doc["torsion_split"] = w.k > 1 ? to_json(torsion_split(w.k)) : Json(nullptr);
  }
  return doc.dump();
}

std::pair<bool, std::vector<std::string>> verify_json(const std::string& text) {
  const VerifyReport r = verify_document(Json::parse(text));
  return {r.ok, r.checks};
}

std::vector<std::pair<std::string, unsigned>> parse_terms(const std::string& text) {
  std::vector<std::pair<std::string, unsigned>> out;
  for (const Term& t : parse_poly(text).terms) out.emplace_back(t.coefficient.get_str(), t.degree);
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_monosep, m) {
  static py::exception<Error> error(m, "MonosepError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("decide", &decide_json, py::arg("relators"));
  m.def("invariants", &invariants_json, py::arg("relators"), py::arg("degree_bound") = 0, py::arg("strict") = false);
  m.def("basis", &basis_json, py::arg("relators"));
  m.def("normal_form", &nf_json, py::arg("relators"), py::arg("poly"));
  m.def("member", &member_json, py::arg("relators"), py::arg("poly"));
  m.def("quotient", &quotient_json, py::arg("relators"), py::arg("modulus"));
  m.def("separate", &separate_json, py::arg("relators"), py::arg("target"), py::arg("generators"),
        py::arg("bound") = "64");
  m.def("witness", &witness_json, py::arg("relators"));
  m.def("verify", &verify_json, py::arg("document"));
  m.def("parse_terms", &parse_terms, py::arg("text"));
  m.def("format_poly", [](const std::string& text) { return to_string(parse_int_poly(text)); }, py::arg("text"));
  m.def("run_cli", &run_cli, py::arg("args"));
}
