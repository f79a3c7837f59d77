#pragma once

#include <optional>
#include <vector>

#include "adic/diagram.hpp"
#include "adic/morphism.hpp"

namespace adic {

/// A Bratteli diagram with a linear order on every incoming edge set.
/// Orders are stored as explicit permutations (minimal edge first), never as
/// implicit declaration order, so serialization is stable.
class OrderedBratteliDiagram {
 public:
  OrderedBratteliDiagram() = default;
  /// Declaration order becomes the edge order.
  explicit OrderedBratteliDiagram(BratteliDiagram d);

  const BratteliDiagram& diagram() const { return d_; }

  /// Replaces the order at one vertex; must be a permutation of r^-1(v).
  void set_order(int level, int vertex, std::vector<int> order);

  /// Incoming edges of a vertex from minimal to maximal.
  const std::vector<int>& incoming_ordered(int level, int vertex) const;
  int rank_of(int level, int edge) const;
  int degree(int level, int vertex) const;
  int edge_at_rank(int level, int vertex, int rank) const;
  int min_edge(int level, int vertex) const;
  int max_edge(int level, int vertex) const;
  bool is_max(int level, int edge) const;
  bool is_min(int level, int edge) const;

  /// Stationary extension; repeats the last block's edges and orders.
  void extend_to(int new_depth);

  bool operator==(const OrderedBratteliDiagram&) const = default;

 private:
  void rebuild_ranks(int level);

  BratteliDiagram d_;
  std::vector<std::vector<std::vector<int>>> order_;  // [level][vertex] -> edges
  std::vector<std::vector<int>> rank_;                // [level][edge] -> rank
};

/// Lexicographic comparison of two paths with the same span and range:
/// compares edge ranks from the top level downward.
int compare_paths(const OrderedBratteliDiagram& od, const Path& a, const Path& b);

/// All paths from any vertex of from_level ranging at to_vertex, ascending.
std::vector<Path> enumerate_paths(const OrderedBratteliDiagram& od, int from_level,
                                  int to_level, int to_vertex);

/// Immediate successor among paths with the same span and range vertex;
/// nullopt is the maximal signal.
std::optional<Path> successor_path(const OrderedBratteliDiagram& od, const Path& p);

enum class Extreme { min, max };

/// The unique all-minimal / all-maximal path from the root to v.
Path extremal_path(const OrderedBratteliDiagram& od, int level, int vertex,
                   Extreme which);
Path extremal_path_from(const OrderedBratteliDiagram& od, int from_level,
                        int to_level, int vertex, Extreme which);

struct VershikOptions {
  /// Wrap the all-maximal path to the all-minimal one. Only allowed on
  /// diagrams whose proper ordering is decided exactly (stationary), and only
  /// from the truncation of the unique infinite maximal path; anything else
  /// keeps the maximal signal, because the finite data does not determine a
  /// successor there.
  bool wrap = false;
};

/// One step of the successor dynamics on root paths.
std::optional<Path> vershik_step(const OrderedBratteliDiagram& od, const Path& p,
                                 VershikOptions opt = {});

enum class ProperMode { exact_stationary, bounded };

struct ProperReport {
  ProperMode mode = ProperMode::bounded;
  bool decided = false;
  bool properly_ordered = false;  // meaningful when decided
  // exact mode: periodic points of the extremal-edge source self-maps
  int max_periodic_points = 0;
  int min_periodic_points = 0;
  int max_thread_vertex = -1;  // the unique periodic vertex when count == 1
  int min_thread_vertex = -1;
  SimpleReport simplicity;
  // bounded mode: numbers of distinct depth-truncated extremal tails per level
  std::vector<int> max_tail_counts;
  std::vector<int> min_tail_counts;
};

/// Exact mode decides unique infinite extremal paths for stationary diagrams
/// by counting periodic points of the source-of-extremal-edge self-maps, and
/// combines with the exact simplicity verdict. Bounded mode reports how many
/// candidate tails survive to the given depth without deciding.
ProperReport check_properly_ordered(const OrderedBratteliDiagram& od,
                                    ProperMode mode, int depth = 0);

struct TowerFloor {
  int vertex = 0;
  long long rank = 0;  // lexicographic rank within its tower, 0 = bottom
  bool operator==(const TowerFloor&) const = default;
};

/// The ordered traversal record of level-n floors visited by the tower of
/// top_vertex at top_level: the truncations of that tower's floors in order.
struct TowerTrace {
  int top_level = 0;
  int top_vertex = 0;
  int base_level = 0;
  std::vector<TowerFloor> floors;
};

TowerTrace tower_trace(const OrderedBratteliDiagram& od, int top_level,
                       int top_vertex, int base_level);

/// Splits a trace into maximal runs and checks each run is one complete tower
/// bottom-to-top; returns the visited vertices in order.
std::vector<int> trace_visits(const OrderedBratteliDiagram& od,
                              const TowerTrace& trace);

struct TelescopeResult {
  OrderedBratteliDiagram diagram;
  /// edge_paths[level][edge] = the original path the new edge contracts.
  std::vector<std::vector<Path>> edge_paths;
};

/// Contracts the diagram to the given cut levels (cuts[0] must be 0); new
/// edges are the paths between consecutive cuts, ordered lexicographically.
TelescopeResult telescope(const OrderedBratteliDiagram& od,
                          const std::vector<int>& cuts);

/// For bijective-on-fibres morphisms: every upstairs incoming order must map
/// exactly onto the downstairs incoming order of the image vertex.
bool check_order_preserving(const OrderedBratteliDiagram& src,
                            const OrderedBratteliDiagram& dst,
                            const DiagramMorphism& m, int depth);

/// Structural equality up to the given per-level vertex bijection
/// (src vertex v at level n corresponds to vertex_bijection[n][v] in dst):
/// edge sets, sources, ranges and orders must all correspond.
bool check_level_isomorphism(const OrderedBratteliDiagram& src,
                             const OrderedBratteliDiagram& dst,
                             const std::vector<std::vector<int>>& vertex_bijection,
                             int depth);

}  // namespace adic
