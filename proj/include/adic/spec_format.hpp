#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adic/group.hpp"
#include "adic/labelling.hpp"
#include "adic/ordering.hpp"
#include "adic/substitution.hpp"

namespace adic {

/// A parsed system description: exactly one of an explicit diagram or a
/// substitution, an optional group with labels, optional orders, and command
/// defaults. See the README for the line grammar.
struct SpecDocument {
  std::optional<FiniteGroup> group;
  std::optional<Substitution> substitution;

  // explicit diagram data
  bool has_diagram = false;
  bool stationary = false;
  std::optional<int> declared_levels;                // the `levels <k>` line
  std::vector<int> level_sizes;                      // [1..]: declared sizes
  std::vector<std::vector<Edge>> level_edges;        // [1..]
  struct OrderLine {
    int level, vertex;
    std::vector<int> order;
  };
  std::vector<OrderLine> orders;

  struct LabelLine {
    int level, edge, value;
  };
  std::vector<LabelLine> labels, labels2;
  struct StationaryLabelLine {
    int letter, position, value;  // position 1-based
  };
  std::vector<StationaryLabelLine> stationary_labels, stationary_labels2;

  int default_depth = 4;
  bool default_depth_explicit = false;
  int default_window = 2000;
  int default_period_bound = 81;
  std::optional<int> seed_letter;

  bool labelled() const {
    return !labels.empty() || !stationary_labels.empty();
  }
  bool second_labelling() const {
    return !labels2.empty() || !stationary_labels2.empty();
  }
};

/// Parses the line-oriented text format; throws "parse" with the line number
/// of the first offending line.
SpecDocument parse_spec(const std::string& text);

/// A materialized system ready for the command layer.
struct BuiltSystem {
  OrderedBratteliDiagram base;
  std::vector<std::vector<std::string>> vertex_names;  // [level][vertex]
  std::optional<FiniteGroup> group;
  std::optional<Labelling> lambda;
  std::optional<Labelling> mu;  // second labelling, when present
  std::optional<Substitution> substitution;
  std::optional<StationaryLabelling> stationary_labelling;
  std::vector<std::string> warnings;
};

/// Materializes the document to the given depth (diagram, orders, labels).
BuiltSystem build_system(const SpecDocument& doc, int depth);

}  // namespace adic
