#include "adic/labelling.hpp"

#include <algorithm>
#include <map>

namespace adic {

Labelling Labelling::trivial(const FiniteGroup& g, const BratteliDiagram& d) {
  Labelling lab(g);
  for (int n = 1; n <= d.depth(); ++n)
    lab.set_level_values(n, std::vector<int>(d.edge_count(n), g.identity()));
  return lab;
}

void Labelling::set_level_values(int level, std::vector<int> values) {
  if (level != depth() + 1)
    throw Error("argument", "label levels must be appended in order");
  values_.push_back(std::move(values));
}

void Labelling::set(int level, int edge, int value) {
  while (depth() < level) values_.push_back({});
  auto& row = values_[level];
  if (edge >= static_cast<int>(row.size())) row.resize(edge + 1, -1);
  row[edge] = value;
}

int Labelling::value(int level, int edge) const {
  if (level < 1 || level > depth() ||
      edge >= static_cast<int>(values_[level].size()) || values_[level][edge] < 0)
    throw Error("labelling-incomplete", "no label for edge " +
                                            std::to_string(edge) + " at level " +
                                            std::to_string(level));
  return values_[level][edge];
}

bool Labelling::covers(const BratteliDiagram& d) const {
  for (int n = 1; n <= d.depth(); ++n) {
    if (n > depth()) return false;
    if (static_cast<int>(values_[n].size()) < d.edge_count(n)) return false;
    for (int e = 0; e < d.edge_count(n); ++e)
      if (values_[n][e] < 0) return false;
  }
  return true;
}

void Labelling::extend_to(const BratteliDiagram& d, int new_depth) {
  if (depth() < 1) throw Error("labelling-incomplete", "no block to repeat");
  while (depth() < new_depth) {
    std::vector<int> block = values_[depth()];
    if (depth() + 1 <= d.depth() &&
        static_cast<int>(block.size()) != d.edge_count(depth() + 1))
      throw Error("labelling-incomplete",
                  "stationary label block does not match the diagram block");
    values_.push_back(std::move(block));
  }
}

int path_label(const BratteliDiagram& d, const Labelling& lab, const Path& p) {
  if (!path_valid(d, p)) throw Error("argument", "invalid path");
  const FiniteGroup& g = lab.group();
  int acc = g.identity();
  for (int i = static_cast<int>(p.edges.size()) - 1; i >= 0; --i)
    acc = g.op(acc, lab.value(p.start_level + 1 + i, p.edges[i]));
  return acc;
}

Labelling telescope_labelling(const BratteliDiagram& base, const Labelling& lab,
                              const TelescopeResult& tel) {
  Labelling out(lab.group());
  for (std::size_t k = 1; k < tel.edge_paths.size(); ++k) {
    std::vector<int> values;
    values.reserve(tel.edge_paths[k].size());
    for (const Path& p : tel.edge_paths[k]) values.push_back(path_label(base, lab, p));
    out.set_level_values(static_cast<int>(k), std::move(values));
  }
  return out;
}

Labelling coboundary_labelling(const BratteliDiagram& d, const FiniteGroup& g,
                               const std::vector<std::vector<int>>& beta) {
  if (static_cast<int>(beta.size()) < d.depth() + 1)
    throw Error("argument", "beta must cover all materialized levels");
  Labelling out(g);
  for (int n = 1; n <= d.depth(); ++n) {
    std::vector<int> values(d.edge_count(n));
    for (int e = 0; e < d.edge_count(n); ++e) {
      const Edge& ed = d.edge(n, e);
      values[e] = g.op(g.inverse(beta[n][ed.range]), beta[n - 1][ed.source]);
    }
    out.set_level_values(n, std::move(values));
  }
  return out;
}

int SkewProduct::vertex_index(int level, int base_vertex, int g) const {
  if (level == 0) return 0;
  return base_vertex * group.order() + g;
}

std::pair<int, int> SkewProduct::vertex_parts(int level, int index) const {
  if (level == 0) return {0, group.identity()};
  return {index / group.order(), index % group.order()};
}

int SkewProduct::edge_index(int, int base_edge, int g) const {
  return base_edge * group.order() + g;
}

std::pair<int, int> SkewProduct::edge_parts(int, int index) const {
  return {index / group.order(), index % group.order()};
}

DiagramMorphism SkewProduct::action(int g) const {
  const BratteliDiagram& d = total.diagram();
  DiagramMorphism m;
  m.vertex_map.resize(d.depth() + 1);
  m.edge_map.resize(d.depth() + 1);
  m.vertex_map[0] = {0};
  const int go = group.order();
  for (int n = 1; n <= d.depth(); ++n) {
    m.vertex_map[n].resize(d.level_size(n));
    for (int v = 0; v < d.level_size(n); ++v)
      m.vertex_map[n][v] = (v / go) * go + group.op(g, v % go);
    m.edge_map[n].resize(d.edge_count(n));
    for (int e = 0; e < d.edge_count(n); ++e)
      m.edge_map[n][e] = (e / go) * go + group.op(g, e % go);
  }
  return m;
}

SkewProduct skew_product(const OrderedBratteliDiagram& base, const Labelling& lab) {
  const BratteliDiagram& d = base.diagram();
  if (!lab.covers(d))
    throw Error("labelling-incomplete",
                "labelling does not cover the materialized diagram");
  const FiniteGroup& g = lab.group();
  const int go = g.order();

  SkewProduct skew;
  skew.group = g;
  BratteliDiagram total;
  for (int n = 1; n <= d.depth(); ++n) {
    std::vector<Edge> edges(static_cast<std::size_t>(d.edge_count(n)) * go);
    for (int e = 0; e < d.edge_count(n); ++e) {
      const Edge& ed = d.edge(n, e);
      for (int h = 0; h < go; ++h) {
        Edge up;
        up.range = ed.range * go + h;
        up.source = n == 1 ? 0 : ed.source * go + g.op(h, lab.value(n, e));
        edges[static_cast<std::size_t>(e) * go + h] = up;
      }
    }
    total.add_level(d.level_size(n) * go, std::move(edges));
  }
  total.set_stationary(d.stationary());
  OrderedBratteliDiagram ordered(std::move(total));
  // pull the base order back through the fibre bijection
  for (int n = 1; n <= d.depth(); ++n) {
    for (int v = 0; v < d.level_size(n); ++v) {
      const auto& base_order = base.incoming_ordered(n, v);
      for (int h = 0; h < go; ++h) {
        std::vector<int> order;
        order.reserve(base_order.size());
        for (int e : base_order) order.push_back(e * go + h);
        ordered.set_order(n, v * go + h, std::move(order));
      }
    }
  }
  skew.total = std::move(ordered);

  DiagramMorphism proj;
  proj.vertex_map.resize(d.depth() + 1);
  proj.edge_map.resize(d.depth() + 1);
  proj.vertex_map[0] = {0};
  for (int n = 1; n <= d.depth(); ++n) {
    proj.vertex_map[n].resize(d.level_size(n) * go);
    for (int v = 0; v < d.level_size(n) * go; ++v) proj.vertex_map[n][v] = v / go;
    proj.edge_map[n].resize(d.edge_count(n) * go);
    for (int e = 0; e < d.edge_count(n) * go; ++e) proj.edge_map[n][e] = e / go;
  }
  skew.projection = std::move(proj);
  return skew;
}

std::vector<std::string> skew_names(const std::vector<std::string>& base_names,
                                    const FiniteGroup& g) {
  std::vector<std::string> names;
  names.reserve(base_names.size() * g.order());
  for (const auto& b : base_names)
    for (int h = 0; h < g.order(); ++h) names.push_back(b + "_" + g.name(h));
  return names;
}

bool verify_cohomologous(const BratteliDiagram& d, const Labelling& lambda,
                         const Labelling& mu,
                         const std::vector<std::vector<int>>& beta) {
  if (!(lambda.group() == mu.group()))
    throw Error("argument", "labellings use different groups");
  const FiniteGroup& g = lambda.group();
  for (int n = 1; n <= d.depth(); ++n) {
    for (int e = 0; e < d.edge_count(n); ++e) {
      const Edge& ed = d.edge(n, e);
      const int lhs = g.op(beta[n][ed.range], mu.value(n, e));
      const int rhs = g.op(lambda.value(n, e), beta[n - 1][ed.source]);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::vector<int>>> find_cohomology(
    const BratteliDiagram& d, const Labelling& lambda, const Labelling& mu,
    int search_depth) {
  if (!(lambda.group() == mu.group()))
    throw Error("argument", "labellings use different groups");
  const FiniteGroup& g = lambda.group();
  const int depth = std::min(search_depth, d.depth());
  for (int root = 0; root < g.order(); ++root) {
    std::vector<std::vector<int>> beta(depth + 1);
    beta[0] = {root};
    bool ok = true;
    for (int n = 1; n <= depth && ok; ++n) {
      beta[n].assign(d.level_size(n), -1);
      for (int e = 0; e < d.edge_count(n) && ok; ++e) {
        const Edge& ed = d.edge(n, e);
        // beta(r) = lambda(e) * beta(s) * mu(e)^-1
        const int forced = g.op(g.op(lambda.value(n, e), beta[n - 1][ed.source]),
                                g.inverse(mu.value(n, e)));
        if (beta[n][ed.range] < 0)
          beta[n][ed.range] = forced;
        else if (beta[n][ed.range] != forced)
          ok = false;
      }
    }
    if (ok) return beta;
  }
  return std::nullopt;
}

CohomologyIso apply_cohomology(const OrderedBratteliDiagram& base,
                               const Labelling& lambda, const Labelling& mu,
                               const std::vector<std::vector<int>>& beta) {
  const BratteliDiagram& d = base.diagram();
  const FiniteGroup& g = lambda.group();
  for (int n = 1; n <= d.depth(); ++n) {
    for (int e = 0; e < d.edge_count(n); ++e) {
      const Edge& ed = d.edge(n, e);
      if (g.op(beta[n][ed.range], mu.value(n, e)) !=
          g.op(lambda.value(n, e), beta[n - 1][ed.source]))
        throw Error("cohomology", "relation fails at level " + std::to_string(n) +
                                      " edge " + std::to_string(e));
    }
  }
  CohomologyIso iso;
  iso.from = skew_product(base, lambda);
  iso.to = skew_product(base, mu);
  const int go = g.order();
  DiagramMorphism phi;
  phi.vertex_map.resize(d.depth() + 1);
  phi.edge_map.resize(d.depth() + 1);
  phi.vertex_map[0] = {0};
  for (int n = 1; n <= d.depth(); ++n) {
    phi.vertex_map[n].resize(d.level_size(n) * go);
    for (int v = 0; v < d.level_size(n); ++v)
      for (int h = 0; h < go; ++h)
        phi.vertex_map[n][v * go + h] = v * go + g.op(h, beta[n][v]);
    phi.edge_map[n].resize(d.edge_count(n) * go);
    for (int e = 0; e < d.edge_count(n); ++e) {
      const int r = d.edge(n, e).range;
      for (int h = 0; h < go; ++h)
        phi.edge_map[n][e * go + h] = e * go + g.op(h, beta[n][r]);
    }
  }
  iso.phi = std::move(phi);
  return iso;
}

int default_loops_depth(const OrderedBratteliDiagram& base, const FiniteGroup& g) {
  return base.diagram().level_size(1) * g.order() + 2;
}

LoopsReport check_loops_lift(const OrderedBratteliDiagram& base,
                             const Labelling& lab, int depth) {
  LoopsReport report;
  report.depth = depth;
  const BratteliDiagram& d = base.diagram();
  if (depth > d.depth())
    throw Error("depth", "loops check past materialized depth");
  const FiniteGroup& g = lab.group();

  struct PairEntry {
    Path beta, alpha;  // alpha succeeds beta
    int src_beta, src_alpha;
    int label_beta, label_alpha;
  };
  // configurations at level k join successor pairs with equal (src_prev,
  // src_next) keys; the key bucket spans all (m, range vertex) groups.
  for (int k = 1; k < depth; ++k) {
    std::map<std::pair<int, int>, std::vector<std::pair<int, PairEntry>>> buckets;
    for (int m = k + 1; m <= depth; ++m) {
      for (int u = 0; u < d.level_size(m); ++u) {
        Path prev = extremal_path_from(base, k, m, u, Extreme::min);
        while (auto next = successor_path(base, prev)) {
          PairEntry entry;
          entry.beta = prev;
          entry.alpha = *next;
          entry.src_beta = path_source(d, entry.beta);
          entry.src_alpha = path_source(d, entry.alpha);
          entry.label_beta = path_label(d, lab, entry.beta);
          entry.label_alpha = path_label(d, lab, entry.alpha);
          buckets[{entry.src_beta, entry.src_alpha}].push_back({m, entry});
          prev = std::move(*next);
        }
      }
    }
    for (const auto& [key, entries] : buckets) {
      (void)key;
      for (const auto& [m, first] : entries) {
        for (const auto& [n, second] : entries) {
          // premise: src(beta-lift at g=e) == src(delta-lift at h), which
          // forces h = label(beta) * label(delta)^-1
          const int h =
              g.op(first.label_beta, g.inverse(second.label_beta));
          const int lhs = first.label_alpha;
          const int rhs = g.op(h, second.label_alpha);
          if (lhs != rhs) {
            LoopsWitness w;
            w.k = k;
            w.m = m;
            w.n = n;
            w.beta = first.beta;
            w.alpha = first.alpha;
            w.delta = second.beta;
            w.gamma = second.alpha;
            w.g = g.identity();
            w.h = h;
            const int go = g.order();
            w.src_beta = first.src_beta * go + first.label_beta;
            w.src_alpha = first.src_alpha * go + first.label_alpha;
            w.src_delta = second.src_beta * go + g.op(h, second.label_beta);
            w.src_gamma = second.src_alpha * go + g.op(h, second.label_alpha);
            report.holds = false;
            report.witness = std::move(w);
            return report;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace adic
