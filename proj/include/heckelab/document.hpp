#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "heckelab/blowup_bundle.hpp"
#include "heckelab/hn_profile.hpp"
#include "heckelab/p1_bundle.hpp"

namespace heckelab {

using Json = nlohmann::ordered_json;

enum class DocumentKind { p1_transition, blowup_bundle, hn_profile };

// One parsed input document. Exactly the member matching `kind` is engaged.
struct Document {
  DocumentKind kind;
  std::optional<P1Transition> transition;
  std::optional<BlowupBundle> bundle;
  std::optional<HNProfile> profile;
};

// Envelope format, version "1":
//   {"version": "1", "kind": "...", "payload": {...}}
// Unknown fields are rejected everywhere; diagnostics name the offending
// field by path. Rationals travel as "p" / "p/q" strings in lowest terms.
// Polynomials are arrays of {"t": int, "x": int, "re": str, "im": str}
// ("x" and "im" may be omitted and default to 0); matrices are row-major
// nested arrays of polynomials. blowup_bundle payloads may omit "jet_order",
// in which case the working precision defaults to ceil(phi_0) + 2, never
// below the deepest x-exponent present.
Document parse_document(const std::string& text);

// Canonical serialization: terms sorted by (t, x), all four term fields
// explicit, lowest-term rationals with the sign on the numerator. Feeding
// the output back through parse_document reproduces the value bit-exactly.
std::string serialize_document(const Document& document);

// Building blocks shared with CLI reports.
Json rational_to_json(const Rational& value);  // string form
Json poly_to_json(const JetLaurentPoly& poly);
Json matrix_to_json(const JetLaurentMatrix& matrix);
Json splitting_to_json(const SplittingType& splitting);
Json profile_blocks_to_json(const HNProfile& profile);
std::string dump_report(const Json& report);

}  // namespace heckelab
