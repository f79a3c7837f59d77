#pragma once

#include <optional>
#include <vector>

#include "adic/diagram.hpp"

namespace adic {

/// Grading-preserving vertex/edge maps between two diagrams. Maps are stored
/// per level and cover levels up to min(depth(src), depth(dst)); the source
/// and target diagrams travel alongside as explicit arguments.
struct DiagramMorphism {
  std::vector<std::vector<int>> vertex_map;  // [0..depth][vertex]
  std::vector<std::vector<int>> edge_map;    // [1..depth][edge]; [0] unused

  int depth() const { return static_cast<int>(vertex_map.size()) - 1; }
};

DiagramMorphism identity_morphism(const BratteliDiagram& d);

/// compose(outer, inner): applies inner first.
DiagramMorphism compose(const DiagramMorphism& outer, const DiagramMorphism& inner);

/// Checks grading and that r,s are intertwined: r(f(e)) = f(r(e)),
/// s(f(e)) = f(s(e)) on all covered levels.
std::vector<Violation> validate_morphism(const BratteliDiagram& src,
                                         const BratteliDiagram& dst,
                                         const DiagramMorphism& m);

struct UlpWitness {
  int level = 0;
  int up_vertex = 0;
  int down_edge = 0;
  int lift_count = 0;  // 0 = no lift, >1 = ambiguous
};

struct UlpReport {
  bool holds = true;
  int depth = 0;
  std::optional<UlpWitness> witness;
};

/// Unique path lifting up to the given depth. Existence and uniqueness of
/// lifts for arbitrary paths reduces level by level to the map
/// r^-1(v) -> r^-1(f(v)) being a bijection for every upstairs vertex v, which
/// is what gets checked; a single-edge witness is reported on failure.
UlpReport check_unique_path_lifting(const BratteliDiagram& src,
                                    const BratteliDiagram& dst,
                                    const DiagramMorphism& m, int depth);

/// The unique upstairs path over `down` ranging at target_up_vertex.
/// Throws "lifting" when no lift exists and "uniqueness" when several do.
Path lift_path(const BratteliDiagram& src, const BratteliDiagram& dst,
               const DiagramMorphism& m, const Path& down, int target_up_vertex);

}  // namespace adic
