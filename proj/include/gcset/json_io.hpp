#pragma once

#include "gcset/complex.hpp"
#include "gcset/gc.hpp"
#include "gcset/geometry.hpp"
#include "gcset/homology.hpp"
#include "gcset/ideal.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gcset::io {

using nlohmann::json;

// ---- data objects -------------------------------------------------------

/// {"vertices": m, "facets": [[0,1,2], ...]}; faces are strictly increasing
/// arrays of 0-based indices.
json to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const json& j);

/// {"variables": m, "generators": [[1,5,6], ...]}
json to_json(const SquarefreeMonomialIdeal& ideal);
SquarefreeMonomialIdeal ideal_from_json(const json& j);

/// {"ambient_dim": d, "forms": [["1","0","0","-1"], ...]} with rationals as
/// "p/q" or decimal-integer strings.
json forms_to_json(const std::vector<LinearForm>& forms);
std::vector<LinearForm> forms_from_json(const json& j);

/// {"chart": k, "points": [{"hom": [...], "affine": [...]}, ...],
///  "provenance": [[...], ...]}
json to_json(const PointConfiguration& config);
PointConfiguration points_from_json(const json& j);

// ---- reports ------------------------------------------------------------

json to_json(const BicmReport& report);
BicmReport bicm_report_from_json(const json& j);

json to_json(const MonomialGCReport& report);
MonomialGCReport gc_report_from_json(const json& j);

json to_json(const VerifyReport& report);
VerifyReport verify_report_from_json(const json& j);

json to_json(const ResolutionProfile& profile);
ResolutionProfile resolution_profile_from_json(const json& j);

// ---- pipeline documents -------------------------------------------------

// A piped document is a JSON object that may carry "ideal", "forms",
// "chart", "points" and fixture metadata side by side; each stage reads what
// it needs and passes the rest through. Bare data objects are accepted too.

SimplicialComplex complex_from_document(const json& document);
SquarefreeMonomialIdeal ideal_from_document(const json& document);
std::vector<LinearForm> forms_from_document(const json& document);
PointConfiguration points_from_document(const json& document);

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& value);

Face face_from_json(const json& j);
json face_to_json(const Face& face);

}  // namespace gcset::io
