#pragma once

#include <string>
#include <vector>

#include "monosep/finite_ring.hpp"
#include "monosep/invariants.hpp"
#include "monosep/separability.hpp"
#include "json.hpp"

namespace monosep {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "monosep/1";

Json to_json(const IntPoly& p);
Json to_json(const RatPoly& p);
Json to_json(const MembershipCertificate& c);
Json to_json(const MonicRelation& r);
Json to_json(const SquarefreeWitness& w);
Json to_json(const RationalGcd& g);
Json to_json(const SeparabilityVerdict& v);
Json to_json(const TheoremWitness& w);
Json to_json(const TorsionSplit& s);
Json to_json(const TorsionData& t);
Json to_json(const RingInvariants& inv);
Json to_json(const CanonicalBasis& b);
Json to_json(const QuotientResult& q);
Json to_json(const SeparationResult& r);

/// Reads {"coefficients": [...]} (decimal strings or integers, ascending) or
/// a bare text form.
IntPoly int_poly_from_json(const Json& j);
RatPoly rat_poly_from_json(const Json& j);
MembershipCertificate certificate_from_json(const Json& j);

/// Envelope shared by every command: schema tag, command name, relators.
Json document(const std::string& command, const Presentation& p);

struct VerifyReport {
  bool ok = false;
  std::vector<std::string> checks;  // one line per check performed
};

/// Re-verifies the certificates inside a document produced by the CLI
/// (decide, member, nf, invariants, witness, separate) against the relators
/// recorded in it.
VerifyReport verify_document(const Json& doc);

/// Recomputes a separation claim from scratch: images by Horner evaluation
/// and the subring image by a plain sum/product fixpoint.
bool verify_separation(const Presentation& p, const IntPoly& target, std::span<const IntPoly> generators,
                       const BigInt& modulus);

}  // namespace monosep
