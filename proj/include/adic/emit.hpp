#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "adic/labelling.hpp"
#include "adic/ordering.hpp"

namespace adic {

/// Deterministic JSON form of an ordered diagram with optional labels and
/// display names. Keys are emitted sorted; identical inputs give identical
/// bytes.
nlohmann::json diagram_to_json(const OrderedBratteliDiagram& od,
                               const std::vector<std::vector<std::string>>& names,
                               const Labelling* labels);

struct ParsedDiagram {
  OrderedBratteliDiagram diagram;
  std::vector<std::vector<std::string>> names;
  std::optional<Labelling> labels;
};

ParsedDiagram diagram_from_json(const nlohmann::json& j,
                                const FiniteGroup* group);

/// DOT text with one cluster per level (root at the top); edges carry the
/// order rank as `rank` and the label as `g`.
std::string diagram_to_dot(const OrderedBratteliDiagram& od,
                           const std::vector<std::vector<std::string>>& names,
                           const Labelling* labels);

/// FNV-1a digest of the raw input, hex-encoded; stable across runs.
std::string text_digest(const std::string& text);

}  // namespace adic
