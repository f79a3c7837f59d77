#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adic/error.hpp"

namespace adic {

struct Edge {
  int source = 0;
  int range = 0;
  bool operator==(const Edge&) const = default;
};

/// A graded Bratteli diagram, materialized to a finite depth. Level 0 is the
/// single root vertex; level n >= 1 holds `level_size(n)` vertices and the
/// edges from level n-1 to level n. Vertex and edge identity is positional
/// (level, index); display names are metadata kept elsewhere.
///
/// Diagrams marked stationary extend on demand by repeating the last
/// materialized edge block. Levels only ever grow, never mutate.
class BratteliDiagram {
 public:
  BratteliDiagram() = default;

  /// Appends one level. Edge endpoints must be valid indices; coverage
  /// conditions (every vertex has incoming/outgoing edges) are soft and
  /// reported by validate().
  int add_level(int vertex_count, std::vector<Edge> edges);

  void set_stationary(bool on = true) { stationary_ = on; }
  bool stationary() const { return stationary_; }

  int depth() const { return static_cast<int>(level_sizes_.size()) - 1; }
  int level_size(int level) const;
  int edge_count(int level) const;
  const std::vector<Edge>& level_edges(int level) const;
  const Edge& edge(int level, int index) const;
  /// Incoming edge indices of a vertex, in declaration order.
  const std::vector<int>& incoming(int level, int vertex) const;

  /// Materializes levels up to new_depth by repeating the last block.
  void extend_to(int new_depth);

  bool operator==(const BratteliDiagram&) const = default;

 private:
  std::vector<int> level_sizes_{1};
  std::vector<std::vector<Edge>> edges_{{}};                 // edges_[0] unused
  std::vector<std::vector<std::vector<int>>> incoming_{{{}}};  // [level][vertex]
  bool stationary_ = false;
};

struct Violation {
  int level = 0;
  int index = 0;
  std::string message;
};

/// Structural check: single root, every vertex at level >= 1 has an incoming
/// edge, every vertex below the top materialized level has an outgoing edge.
std::vector<Violation> validate(const BratteliDiagram& d);

/// A finite edge sequence between consecutive levels; edges[i] lives at level
/// start_level + 1 + i.
struct Path {
  int start_level = 0;
  std::vector<int> edges;

  int end_level() const { return start_level + static_cast<int>(edges.size()); }
  bool operator==(const Path&) const = default;
};

int path_source(const BratteliDiagram& d, const Path& p);
int path_range(const BratteliDiagram& d, const Path& p);
bool path_valid(const BratteliDiagram& d, const Path& p);
/// Truncation to the initial segment ending at to_level.
Path truncate_path(const Path& p, int to_level);

/// Number of paths from any vertex of from_level ranging at to_vertex.
long long count_paths_to(const BratteliDiagram& d, int from_level, int to_level,
                         int to_vertex);
/// Heights of the root-path towers at a level.
std::vector<long long> tower_heights(const BratteliDiagram& d, int level);
/// M[range][source] = number of edges between the two levels.
std::vector<std::vector<long long>> incidence_matrix(const BratteliDiagram& d,
                                                     int level);

enum class SimpleStatus { simple_with_gap, not_established, refuted_stationary };

struct SimpleReport {
  SimpleStatus status = SimpleStatus::not_established;
  int gap = -1;
  bool exact = false;  // stationary diagrams are decided exactly
  int tested_depth = 0;
};

/// Least g such that every vertex of V_n joins every vertex of V_{n+g}.
/// Stationary diagrams are decided exactly through positivity of a power of
/// the repeating incidence matrix; otherwise the verdict is depth-bounded and
/// "not established" is distinct from "refuted".
SimpleReport check_simple(const BratteliDiagram& d, int max_gap);

}  // namespace adic
