#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "quatinv/decompose.hpp"
#include "quatinv/gauge.hpp"
#include "quatinv/witness.hpp"

namespace quatinv {

using Json = nlohmann::json;  // keys sorted, so dumps are byte-stable

// "q" or "fp:<p>".
Field parse_field(const std::string& text);

// Parses a JSON document; syntax errors become ParseError with 1-based
// line and column.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

TowerNames tower_from_json(const Json& j, std::size_t default_arity = 0);

// { "field", "tower", "squares", "signs", "pairing" }; pairing (a +-1
// matrix) defaults to the standard block form, signs default to -1.
Json presentation_to_json(const ArmaturePresentation& P, const TowerNames& names);
ArmaturePresentation presentation_from_json(const Json& j, std::optional<Field> field = std::nullopt);

// [ { "class": 5, "word": "g1g3", "coeff": "3*t" }, ... ] by ascending class.
Json element_to_json(const ArmatureElement& x, const TowerNames& names);
ArmatureElement element_from_json(const Json& j, const PresentationPtr& pres, const TowerNames& names);

Json factor_to_json(const WitnessFactor& f, const TowerNames& names);
Json witness_to_json(const DecompositionWitness& w, const TowerNames& names);
// Reads "source" and the images of each factor; everything else is derived.
DecompositionWitness witness_from_json(const Json& j, std::optional<Field> field = std::nullopt);

// { "tower", "a", "b", "twist": [x0, x1, x2, x3] } with a basis twist.
struct QuatInput {
  QuatAlg algebra;
  int twist = 0;
  TowerNames names;
};
QuatInput quat_from_json(const Json& j, std::optional<Field> field = std::nullopt);

Json gauge_report_to_json(const GaugeCheckReport& r);
Json residue_to_json(const ArmatureGauge& G, const ResidueReport& R, const TowerNames& names);

}  // namespace quatinv
