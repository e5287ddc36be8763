#pragma once

#include "loclaurent/verification.hpp"

#include <string>
#include <string_view>

namespace loclaurent {

inline constexpr int kSchemaVersion = 1;

/// Parses a dataset file (JSON, schema_version 1).
///
///   {
///     "schema_version": 1,
///     "name": "sphere(1,1)",
///     "mode": "point" | "algebra",
///     "metadata": "...",
///     "algebra": {"basis": [...], "structure_constants": [[[...]]], "unit": [...]},
///     "components": [
///       {"label": "south", "phi": -1, "line_class": "1",
///        "summands": [{"weight": 1, "rank": 1, "exterior_powers": [[...], ...]}],
///        "pushforward": [...], "algebra": "point" | {...}}
///     ],
///     "cut": {"plus_components": [...], "minus_components": [...],
///             "reduced_quantization": "1", "note": "...", "free_action": true},
///     "expected": {"character": [[-1, "1"], ...], "invariant_part": "1", "note": "..."}
///   }
///
/// Rationals are strings "p/q". In point mode a component defaults to an
/// isolated point (line_class scalar, exterior powers binomial, pushforward
/// identity); in algebra mode it defaults to the top-level algebra and must
/// list its classes as coordinate vectors. Either default can be overridden
/// per component with "algebra".
///
/// Throws ParseError carrying "line L, column C" for malformed JSON or a
/// field path for schema violations. Does not run validate_manifold.
ExampleRecord parse_dataset(std::string_view text);

/// Deterministic pretty-printed JSON that parse_dataset reads back.
std::string dataset_to_json(const ExampleRecord &record);

} // namespace loclaurent
