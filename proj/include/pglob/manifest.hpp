#pragma once

// JSON manifests: a presentation, a point set with optional metric and
// topology, per-generator partial maps, and optionally a finite monoid with
// its element action. Names are resolved here; the library sees indices.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pglob/glob.hpp"

namespace pglob {

struct Manifest {
  Space space;
  /// Present when the manifest declares or implies a presentation.
  std::optional<PartialAction> action;
  std::optional<MonoidAction> monoid;
  nlohmann::json raw;
};

/// Throws InputError on unresolved names, ragged matrices or bad shapes.
/// `step_budget` replaces the shortlex requirement on the presentation.
Manifest parse_manifest(const nlohmann::json& j, std::optional<std::size_t> step_budget = {});
Manifest load_manifest(const std::string& path, std::optional<std::size_t> step_budget = {});
nlohmann::json read_json(const std::string& path);

/// {"points": [...], "metric": [[...]], "topology": {"opens": [[...]]}}.
Space parse_space(const nlohmann::json& j);

/// Whitespace-separated generator names followed by a point name, e.g.
/// "g h x" for the configuration (g h, x).
Config parse_config(const PartialAction& a, std::string_view text);

std::string format_word(const Presentation& p, const Word& w);
std::string format_element(const PartialAction& a, const NormalElement& el);
std::string format_config(const PartialAction& a, const Config& c);
std::string format_set(const Space& s, const PointSet& set);

/// Finite distances as numbers, +inf as the string "inf".
nlohmann::json distance_json(Distance d);
nlohmann::json matrix_json(const std::vector<std::vector<Distance>>& m);

/// A list of partial maps, each an object {"x": "y", ...} over point names.
std::vector<PartialGenMap> parse_maps(const Space& space, const nlohmann::json& j);

}  // namespace pglob
