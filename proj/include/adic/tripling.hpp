#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "adic/labelling.hpp"
#include "adic/ordering.hpp"

namespace adic {

/// The tripling of an ordered diagram: vertices are the witnessed consecutive
/// tower triples (u,v,w), edges are (u,e,w) over the middle coordinate, and
/// the source of the i-th edge into (u,v,w) is the triple of sources around
/// position i, with the maximal edge into u supplying the left context and
/// the minimal edge into w the right one. The middle-coordinate projection
/// has unique path lifting.
struct TripledDiagram {
  OrderedBratteliDiagram total;
  std::vector<std::vector<std::array<int, 3>>> triples;      // [level][vertex]
  std::vector<std::vector<std::array<int, 3>>> edge_triples;  // [level][edge] = (u, base edge, w)
  DiagramMorphism projection;  // total -> base, middle coordinate
  /// Stationary bases use the exact closure; otherwise the triple sets are
  /// only witnessed up to the construction depth.
  bool exact = true;

  int triple_index(int level, const std::array<int, 3>& t) const;

  std::vector<std::map<std::array<int, 3>, int>> index;  // [level]
};

TripledDiagram triple_diagram(const OrderedBratteliDiagram& base, int depth);

/// Pushes an order-preserving automorphism of the base through the tripling.
DiagramMorphism induced_triple_automorphism(const TripledDiagram& tripled,
                                            const DiagramMorphism& base_auto);

/// Display names "[u,v,w]" from base vertex names.
std::vector<std::string> triple_names(const std::vector<std::string>& base_names,
                                      const std::vector<std::array<int, 3>>& triples);

struct QuotientResult {
  OrderedBratteliDiagram quotient;
  DiagramMorphism projection;  // total -> quotient
  std::vector<std::vector<int>> orbit_of;         // [level][vertex]
  std::vector<std::vector<int>> representative;   // [level][orbit] -> least vertex
  std::vector<std::vector<int>> edge_orbit_of;    // [level][edge]
  std::vector<std::vector<int>> edge_representative;
};

/// Quotient by a free action given as one automorphism per group element.
/// Freeness on levels >= 1 is verified (throws "freeness" with a witness),
/// and the descent of range, source and order to orbits is checked rather
/// than assumed (throws "order-descent").
QuotientResult quotient_by_action(const OrderedBratteliDiagram& total,
                                  const FiniteGroup& g,
                                  const std::vector<DiagramMorphism>& actions);

struct ClauseResult {
  std::string clause;
  bool ok = false;
  std::string detail;
};

/// The full commuting square over a simple ordered base with labelling
/// lambda: the skew product, its tripling, the quotient of the tripling by
/// the group action, the pulled-back labelling mu on the quotient, the skew
/// product of the quotient, and the comparison isomorphism between the
/// tripled diagram and that second skew product. Every claimed property is
/// verified to the given depth and reported as a clause.
struct CommutingSquare {
  OrderedBratteliDiagram base;
  Labelling lambda;
  SkewProduct skew;            // B(lambda); pi = skew.projection
  TripledDiagram tripled;      // tripling of skew.total
  QuotientResult quotient;     // quotient of the tripling
  DiagramMorphism rho;         // quotient -> base (middle coordinate, group dropped)
  Labelling mu;                // lambda pulled back through rho
  SkewProduct quotient_skew;   // skew product of the quotient by mu; pi~ = its projection
  DiagramMorphism phi;         // tripled.total -> quotient_skew.total
  DiagramMorphism rho_prime;   // tripled.total -> skew.total (middle coordinate)
  int depth = 0;
  std::vector<ClauseResult> clauses;

  bool all_ok() const;
  const ClauseResult& clause(const std::string& name) const;
};

CommutingSquare build_commuting_square(const OrderedBratteliDiagram& base,
                                       const Labelling& lambda, int depth);

/// The cocycle read off the quotient towers at one level: the bottom floor of
/// the tower of an orbit [(u,g1),(v,g2),(w,g3)] carries g1^-1 * g2, all other
/// floors the identity. The value is independent of the representative.
struct QuotientCocycle {
  int level = 0;
  std::vector<int> bottom_value;  // per quotient vertex
};

QuotientCocycle cocycle_from_square(const CommutingSquare& square, int level);
int cocycle_value(const QuotientCocycle& c, int quotient_vertex, long long floor_rank,
                  const FiniteGroup& g);

}  // namespace adic
