#pragma once

#include <optional>
#include <vector>

#include "adic/group.hpp"
#include "adic/ordering.hpp"

namespace adic {

/// A group element per materialized edge.
class Labelling {
 public:
  Labelling() = default;
  explicit Labelling(FiniteGroup group) : group_(std::move(group)) {}

  static Labelling trivial(const FiniteGroup& g, const BratteliDiagram& d);

  const FiniteGroup& group() const { return group_; }

  void set_level_values(int level, std::vector<int> values);
  void set(int level, int edge, int value);
  int value(int level, int edge) const;
  int depth() const { return static_cast<int>(values_.size()) - 1; }

  /// True when every edge of the materialized diagram has a value.
  bool covers(const BratteliDiagram& d) const;

  /// Repeats the last value block alongside a stationary diagram extension.
  void extend_to(const BratteliDiagram& d, int new_depth);

  bool operator==(const Labelling&) const = default;

 private:
  FiniteGroup group_;
  std::vector<std::vector<int>> values_{{}};  // [level][edge]; [0] unused
};

/// label(e_n..e_m) = label(e_m) * label(e_{m-1}) * ... * label(e_n).
int path_label(const BratteliDiagram& d, const Labelling& lab, const Path& p);

/// Labels of the contracted diagram: each new edge inherits the label of the
/// path it contracts.
Labelling telescope_labelling(const BratteliDiagram& base, const Labelling& lab,
                              const TelescopeResult& tel);

/// lambda(e) = beta(r(e))^-1 * beta(s(e)); beta is given per (level, vertex),
/// with beta[0][0] the root value (conventionally the identity).
Labelling coboundary_labelling(const BratteliDiagram& d, const FiniteGroup& g,
                               const std::vector<std::vector<int>>& beta);

/// The skew-product diagram over vertices (v,g): edges (e,g) have range
/// (r(e),g) and source (s(e), g*label(e)); level-1 sources collapse to the
/// root. The order is pulled back so the projection is order preserving, the
/// group acts freely by (v,h) -> (v,gh), and the projection has unique path
/// lifting.
struct SkewProduct {
  OrderedBratteliDiagram total;
  FiniteGroup group;
  DiagramMorphism projection;  // total -> base

  int vertex_index(int level, int base_vertex, int g) const;
  std::pair<int, int> vertex_parts(int level, int index) const;  // (base, g)
  int edge_index(int level, int base_edge, int g) const;
  std::pair<int, int> edge_parts(int level, int index) const;

  /// The automorphism (v,h) -> (v, g*h), (e,h) -> (e, g*h).
  DiagramMorphism action(int g) const;
};

SkewProduct skew_product(const OrderedBratteliDiagram& base, const Labelling& lab);

/// Display names for skew vertices: "<base>_<element>".
std::vector<std::string> skew_names(const std::vector<std::string>& base_names,
                                    const FiniteGroup& g);

/// beta(r(e)) * mu(e) == lambda(e) * beta(s(e)) on every materialized edge.
bool verify_cohomologous(const BratteliDiagram& d, const Labelling& lambda,
                         const Labelling& mu,
                         const std::vector<std::vector<int>>& beta);

/// Searches for a witness beta up to search_depth. Every vertex is forced
/// from the root value through any incoming edge, so the search tries each
/// group element as the root value and propagates; absence of a witness is
/// conclusive for the materialized levels.
std::optional<std::vector<std::vector<int>>> find_cohomology(
    const BratteliDiagram& d, const Labelling& lambda, const Labelling& mu,
    int search_depth);

struct CohomologyIso {
  SkewProduct from;  // skew product of lambda
  SkewProduct to;    // skew product of mu
  DiagramMorphism phi;
};

/// The isomorphism (v,g) -> (v, g*beta(v)), (e,g) -> (e, g*beta(r(e))).
/// Throws "cohomology" naming the first edge where the relation fails.
CohomologyIso apply_cohomology(const OrderedBratteliDiagram& base,
                               const Labelling& lambda, const Labelling& mu,
                               const std::vector<std::vector<int>>& beta);

struct LoopsWitness {
  int k = 0, m = 0, n = 0;
  Path alpha, beta, gamma, delta;  // base paths; alpha succeeds beta, gamma succeeds delta
  int g = 0, h = 0;                // upstairs cosets making the premise true
  int src_alpha = 0, src_beta = 0, src_gamma = 0, src_delta = 0;  // skew vertices
};

struct LoopsReport {
  bool holds = true;
  int depth = 0;
  std::optional<LoopsWitness> witness;
};

/// Depth-bounded loops-lift-to-loops check for the skew projection of the
/// labelling: enumerates matched successor pairs (beta',alpha') into u' and
/// (delta',gamma') into v' with equal source pairs, lifts them, and demands
/// that equal beta/delta sources force equal alpha/gamma sources upstairs.
/// Sources of lifts are (source(p), g*label(p)), and the premise pins the
/// second coset, so each configuration reduces to one group identity:
/// label(alpha)*label(gamma)^-1 == label(beta)*label(delta)^-1.
LoopsReport check_loops_lift(const OrderedBratteliDiagram& base,
                             const Labelling& lab, int depth);

/// Pigeonhole-motivated default depth for stationary labellings: |V_1|*|G|+2.
int default_loops_depth(const OrderedBratteliDiagram& base, const FiniteGroup& g);

}  // namespace adic
