#include "adic/tripling.hpp"

#include <algorithm>
#include <set>

namespace adic {

int TripledDiagram::triple_index(int level, const std::array<int, 3>& t) const {
  auto it = index[level].find(t);
  if (it == index[level].end())
    throw Error("argument", "triple not witnessed at level " + std::to_string(level));
  return it->second;
}

namespace {

using Triple = std::array<int, 3>;

// visit word of a vertex: sources of its incoming edges in order
std::vector<int> visit_word(const OrderedBratteliDiagram& od, int level, int v) {
  std::vector<int> word;
  for (int e : od.incoming_ordered(level, v))
    word.push_back(od.diagram().edge(level, e).source);
  return word;
}

// triples of the expansion of (a,b,c) one level down
std::vector<Triple> expand_triple(const std::vector<std::vector<int>>& words,
                                  const Triple& t) {
  const auto& wb = words[t[1]];
  const int left = words[t[0]].back();
  const int right = words[t[2]].front();
  std::vector<Triple> out;
  if (wb.size() == 1) {
    out.push_back({left, wb[0], right});
    return out;
  }
  out.push_back({left, wb[0], wb[1]});
  for (std::size_t i = 0; i + 2 < wb.size(); ++i)
    out.push_back({wb[i], wb[i + 1], wb[i + 2]});
  out.push_back({wb[wb.size() - 2], wb.back(), right});
  return out;
}

using FactorSet = std::set<std::vector<int>>;

// factors (length <= 3) of the one-step expansions of all single letters
// above plus all known factors above; a window of three letters touches at
// most three consecutive expanded blocks, so these sets close level by level
FactorSet expand_factors(const std::vector<std::vector<int>>& words,
                         const FactorSet& above, int letters_above) {
  FactorSet out;
  auto expand = [&](const std::vector<int>& f) {
    std::vector<int> image;
    for (int a : f)
      image.insert(image.end(), words[a].begin(), words[a].end());
    for (std::size_t i = 0; i < image.size(); ++i)
      for (std::size_t len = 1; len <= 3 && i + len <= image.size(); ++len)
        out.insert(std::vector<int>(image.begin() + i, image.begin() + i + len));
  };
  for (int a = 0; a < letters_above; ++a) expand({a});
  for (const auto& f : above) expand(f);
  return out;
}

std::set<Triple> triples_of(const FactorSet& factors) {
  std::set<Triple> out;
  for (const auto& f : factors)
    if (f.size() == 3) out.insert({f[0], f[1], f[2]});
  return out;
}

}  // namespace

TripledDiagram triple_diagram(const OrderedBratteliDiagram& base, int depth) {
  const BratteliDiagram& d = base.diagram();
  if (depth < 2 || depth > d.depth())
    throw Error("depth", "tripling needs 2 <= depth <= materialized depth");

  // words[n][v] = visit word of vertex v at level n over level n-1
  std::vector<std::vector<std::vector<int>>> words(depth + 1);
  for (int n = 1; n <= depth; ++n) {
    words[n].resize(d.level_size(n));
    for (int v = 0; v < d.level_size(n); ++v) words[n][v] = visit_word(base, n, v);
  }

  // witnessed triples per level
  std::vector<std::set<Triple>> tset(depth + 1);
  const bool stationary = d.stationary();
  TripledDiagram out;
  out.exact = stationary;
  int top;  // deepest level of the tripled diagram
  if (stationary) {
    // one factor closure on the repeating block covers every level
    top = depth;
    const auto& block = words[depth];
    FactorSet factors;
    while (true) {
      FactorSet next = expand_factors(block, factors, d.level_size(depth));
      for (const auto& f : factors) next.insert(f);
      if (next == factors) break;
      factors = std::move(next);
    }
    const auto closure = triples_of(factors);
    for (int n = 1; n <= top; ++n) tset[n] = closure;
  } else {
    // a triple at level n needs a witness tower strictly above it, so the
    // deepest populated level is at most depth-1; short factors propagate
    // downward until windows of three fill in
    FactorSet above;
    for (int n = depth - 1; n >= 1; --n) {
      above = expand_factors(words[n + 1], above, d.level_size(n + 1));
      tset[n] = triples_of(above);
    }
    top = 0;
    for (int n = depth - 1; n >= 1; --n) {
      if (!tset[n].empty()) {
        top = n;
        break;
      }
    }
    if (top == 0)
      throw Error("depth",
                  "no tower triple is witnessed within the materialized depth");
  }

  out.triples.resize(top + 1);
  out.index.resize(top + 1);
  out.triples[0] = {{0, 0, 0}};
  out.index[0][{0, 0, 0}] = 0;
  for (int n = 1; n <= top; ++n) {
    out.triples[n].assign(tset[n].begin(), tset[n].end());
    for (std::size_t i = 0; i < out.triples[n].size(); ++i)
      out.index[n][out.triples[n][i]] = static_cast<int>(i);
  }

  // edges: for each triple vertex (u,v,w) and each edge e into v in order,
  // one edge (u,e,w); its source is the surrounding source triple
  BratteliDiagram td;
  out.edge_triples.resize(top + 1);
  for (int n = 1; n <= top; ++n) {
    std::vector<Edge> edges;
    std::vector<Triple> etriples;
    for (std::size_t ti = 0; ti < out.triples[n].size(); ++ti) {
      const Triple& t = out.triples[n][ti];
      const auto& order = base.incoming_ordered(n, t[1]);
      if (n == 1) {
        for (int e : order) {
          edges.push_back(Edge{0, static_cast<int>(ti)});
          etriples.push_back({t[0], e, t[2]});
        }
        continue;
      }
      const auto srcs = expand_triple(words[n], t);
      if (srcs.size() != order.size())
        throw Error("argument", "tripling source rule out of step with the order");
      for (std::size_t i = 0; i < order.size(); ++i) {
        auto it = out.index[n - 1].find(srcs[i]);
        if (it == out.index[n - 1].end())
          throw Error("argument",
                      "tripled edge source not witnessed one level down");
        edges.push_back(Edge{it->second, static_cast<int>(ti)});
        etriples.push_back({t[0], order[i], t[2]});
      }
    }
    td.add_level(static_cast<int>(out.triples[n].size()), std::move(edges));
    out.edge_triples[n] = std::move(etriples);
  }
  td.set_stationary(stationary);
  out.total = OrderedBratteliDiagram(std::move(td));

  DiagramMorphism proj;
  proj.vertex_map.resize(top + 1);
  proj.edge_map.resize(top + 1);
  proj.vertex_map[0] = {0};
  for (int n = 1; n <= top; ++n) {
    proj.vertex_map[n].resize(out.triples[n].size());
    for (std::size_t i = 0; i < out.triples[n].size(); ++i)
      proj.vertex_map[n][i] = out.triples[n][i][1];
    proj.edge_map[n].resize(out.edge_triples[n].size());
    for (std::size_t i = 0; i < out.edge_triples[n].size(); ++i)
      proj.edge_map[n][i] = out.edge_triples[n][i][1];
  }
  out.projection = std::move(proj);
  return out;
}

DiagramMorphism induced_triple_automorphism(const TripledDiagram& tripled,
                                            const DiagramMorphism& base_auto) {
  const BratteliDiagram& d = tripled.total.diagram();
  DiagramMorphism m;
  m.vertex_map.resize(d.depth() + 1);
  m.edge_map.resize(d.depth() + 1);
  m.vertex_map[0] = {0};
  for (int n = 1; n <= d.depth(); ++n) {
    m.vertex_map[n].resize(d.level_size(n));
    for (int v = 0; v < d.level_size(n); ++v) {
      const auto& t = tripled.triples[n][v];
      const std::array<int, 3> image = {base_auto.vertex_map[n][t[0]],
                                        base_auto.vertex_map[n][t[1]],
                                        base_auto.vertex_map[n][t[2]]};
      m.vertex_map[n][v] = tripled.triple_index(n, image);
    }
    m.edge_map[n].assign(d.edge_count(n), -1);
    for (int e = 0; e < d.edge_count(n); ++e) {
      const auto& t = tripled.edge_triples[n][e];
      const std::array<int, 3> image = {base_auto.vertex_map[n][t[0]],
                                        base_auto.edge_map[n][t[1]],
                                        base_auto.vertex_map[n][t[2]]};
      // locate the edge with this triple among the incoming edges of the
      // image vertex
      const int target = m.vertex_map[n][d.edge(n, e).range];
      for (int f : d.incoming(n, target)) {
        if (tripled.edge_triples[n][f] == image) {
          m.edge_map[n][e] = f;
          break;
        }
      }
      if (m.edge_map[n][e] < 0)
        throw Error("argument", "automorphism does not preserve the triple set");
    }
  }
  return m;
}

std::vector<std::string> triple_names(const std::vector<std::string>& base_names,
                                      const std::vector<std::array<int, 3>>& triples) {
  std::vector<std::string> out;
  out.reserve(triples.size());
  for (const auto& t : triples)
    out.push_back("[" + base_names[t[0]] + "," + base_names[t[1]] + "," +
                  base_names[t[2]] + "]");
  return out;
}

QuotientResult quotient_by_action(const OrderedBratteliDiagram& total,
                                  const FiniteGroup& g,
                                  const std::vector<DiagramMorphism>& actions) {
  const BratteliDiagram& d = total.diagram();
  if (static_cast<int>(actions.size()) != g.order())
    throw Error("argument", "need one automorphism per group element");
  const int depth = d.depth();

  // freeness on levels >= 1
  for (int h = 0; h < g.order(); ++h) {
    if (h == g.identity()) continue;
    for (int n = 1; n <= depth; ++n) {
      for (int v = 0; v < d.level_size(n); ++v)
        if (actions[h].vertex_map[n][v] == v)
          throw Error("freeness", "element " + g.name(h) + " fixes vertex " +
                                      std::to_string(v) + " at level " +
                                      std::to_string(n));
      for (int e = 0; e < d.edge_count(n); ++e)
        if (actions[h].edge_map[n][e] == e)
          throw Error("freeness", "element " + g.name(h) + " fixes edge " +
                                      std::to_string(e) + " at level " +
                                      std::to_string(n));
    }
  }

  QuotientResult out;
  out.orbit_of.resize(depth + 1);
  out.representative.resize(depth + 1);
  out.edge_orbit_of.resize(depth + 1);
  out.edge_representative.resize(depth + 1);
  out.orbit_of[0] = {0};
  out.representative[0] = {0};

  for (int n = 1; n <= depth; ++n) {
    out.orbit_of[n].assign(d.level_size(n), -1);
    for (int v = 0; v < d.level_size(n); ++v) {
      if (out.orbit_of[n][v] >= 0) continue;
      int least = v;
      for (int h = 0; h < g.order(); ++h)
        least = std::min(least, actions[h].vertex_map[n][v]);
      const int orbit = static_cast<int>(out.representative[n].size());
      out.representative[n].push_back(least);
      for (int h = 0; h < g.order(); ++h) out.orbit_of[n][actions[h].vertex_map[n][v]] = orbit;
    }
    out.edge_orbit_of[n].assign(d.edge_count(n), -1);
    for (int e = 0; e < d.edge_count(n); ++e) {
      if (out.edge_orbit_of[n][e] >= 0) continue;
      int least = e;
      for (int h = 0; h < g.order(); ++h)
        least = std::min(least, actions[h].edge_map[n][e]);
      const int orbit = static_cast<int>(out.edge_representative[n].size());
      out.edge_representative[n].push_back(least);
      for (int h = 0; h < g.order(); ++h)
        out.edge_orbit_of[n][actions[h].edge_map[n][e]] = orbit;
    }
  }

  // descent: the orbit of range/source must not depend on the representative
  for (int n = 1; n <= depth; ++n) {
    for (int e = 0; e < d.edge_count(n); ++e) {
      for (int h = 0; h < g.order(); ++h) {
        const int f = actions[h].edge_map[n][e];
        if (out.orbit_of[n][d.edge(n, f).range] != out.orbit_of[n][d.edge(n, e).range] ||
            out.orbit_of[n - 1][d.edge(n, f).source] !=
                out.orbit_of[n - 1][d.edge(n, e).source])
          throw Error("order-descent", "range/source do not descend to orbits");
      }
    }
  }

  // build the quotient diagram; edges grouped by orbit vertex in the order of
  // the representative's incoming edges
  BratteliDiagram qd;
  std::vector<std::vector<int>> edge_position(depth + 1);  // orbit edge -> new index
  for (int n = 1; n <= depth; ++n) {
    std::vector<Edge> edges;
    edge_position[n].assign(out.edge_representative[n].size(), -1);
    for (std::size_t q = 0; q < out.representative[n].size(); ++q) {
      const int rep = out.representative[n][q];
      for (int e : total.incoming_ordered(n, rep)) {
        const int eq = out.edge_orbit_of[n][e];
        if (edge_position[n][eq] >= 0)
          throw Error("order-descent", "edge orbit met twice while descending");
        edge_position[n][eq] = static_cast<int>(edges.size());
        edges.push_back(Edge{out.orbit_of[n - 1][d.edge(n, e).source],
                             static_cast<int>(q)});
      }
    }
    if (std::count(edge_position[n].begin(), edge_position[n].end(), -1) > 0)
      throw Error("order-descent", "some edge orbit missed while descending");
    qd.add_level(static_cast<int>(out.representative[n].size()), std::move(edges));
  }
  qd.set_stationary(d.stationary());
  out.quotient = OrderedBratteliDiagram(std::move(qd));

  // order descent must agree from every representative
  for (int n = 1; n <= depth; ++n) {
    for (int v = 0; v < d.level_size(n); ++v) {
      const int q = out.orbit_of[n][v];
      const auto& descended = out.quotient.incoming_ordered(n, q);
      const auto& up = total.incoming_ordered(n, v);
      if (descended.size() != up.size())
        throw Error("order-descent", "incoming degree changed in the quotient");
      for (std::size_t i = 0; i < up.size(); ++i)
        if (descended[i] != edge_position[n][out.edge_orbit_of[n][up[i]]])
          throw Error("order-descent", "incoming order does not descend at vertex " +
                                           std::to_string(v) + " level " +
                                           std::to_string(n));
    }
  }

  DiagramMorphism proj;
  proj.vertex_map.resize(depth + 1);
  proj.edge_map.resize(depth + 1);
  proj.vertex_map[0] = {0};
  for (int n = 1; n <= depth; ++n) {
    proj.vertex_map[n] = out.orbit_of[n];
    proj.edge_map[n].resize(d.edge_count(n));
    for (int e = 0; e < d.edge_count(n); ++e)
      proj.edge_map[n][e] = edge_position[n][out.edge_orbit_of[n][e]];
  }
  out.projection = std::move(proj);

  // re-express edge orbits in the quotient's edge numbering
  for (int n = 1; n <= depth; ++n) {
    std::vector<int> rep_new(out.edge_representative[n].size());
    for (std::size_t eq = 0; eq < out.edge_representative[n].size(); ++eq)
      rep_new[edge_position[n][eq]] = out.edge_representative[n][eq];
    out.edge_representative[n] = std::move(rep_new);
    for (int e = 0; e < d.edge_count(n); ++e)
      out.edge_orbit_of[n][e] = edge_position[n][out.edge_orbit_of[n][e]];
  }
  return out;
}

bool CommutingSquare::all_ok() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const ClauseResult& c) { return c.ok; });
}

const ClauseResult& CommutingSquare::clause(const std::string& name) const {
  for (const auto& c : clauses)
    if (c.clause == name) return c;
  throw Error("argument", "no clause named '" + name + "'");
}

namespace {

bool maps_equal(const DiagramMorphism& a, const DiagramMorphism& b, int depth) {
  for (int n = 0; n <= depth; ++n) {
    if (a.vertex_map[n] != b.vertex_map[n]) return false;
    if (n >= 1 && a.edge_map[n] != b.edge_map[n]) return false;
  }
  return true;
}

bool bijective_per_level(const DiagramMorphism& m, const BratteliDiagram& dst,
                         int depth) {
  for (int n = 0; n <= depth; ++n) {
    std::vector<bool> hit(dst.level_size(n), false);
    if (static_cast<int>(m.vertex_map[n].size()) != dst.level_size(n)) return false;
    for (int v : m.vertex_map[n]) {
      if (v < 0 || v >= dst.level_size(n) || hit[v]) return false;
      hit[v] = true;
    }
    if (n == 0) continue;
    std::vector<bool> ehit(dst.edge_count(n), false);
    if (static_cast<int>(m.edge_map[n].size()) != dst.edge_count(n)) return false;
    for (int e : m.edge_map[n]) {
      if (e < 0 || e >= dst.edge_count(n) || ehit[e]) return false;
      ehit[e] = true;
    }
  }
  return true;
}

}  // namespace

CommutingSquare build_commuting_square(const OrderedBratteliDiagram& base,
                                       const Labelling& lambda, int depth) {
  CommutingSquare sq;
  sq.base = base;
  sq.base.extend_to(depth);
  sq.lambda = lambda;
  if (sq.lambda.depth() < depth) sq.lambda.extend_to(sq.base.diagram(), depth);
  sq.depth = depth;
  const FiniteGroup& g = lambda.group();

  auto add_clause = [&](const std::string& name, bool ok, std::string detail = "") {
    sq.clauses.push_back(ClauseResult{name, ok, std::move(detail)});
  };

  const SimpleReport simple = check_simple(sq.base.diagram(), depth);
  add_clause("base_simple", simple.status == SimpleStatus::simple_with_gap,
             simple.status == SimpleStatus::simple_with_gap
                 ? "gap " + std::to_string(simple.gap)
                 : "base diagram not known simple");

  sq.skew = skew_product(sq.base, sq.lambda);
  if (sq.skew.total.diagram().stationary()) {
    sq.tripled = triple_diagram(sq.skew.total, depth);
  } else {
    // non-stationary bases need one extra level to witness top triples
    if (sq.base.diagram().depth() < depth + 1)
      throw Error("depth",
                  "non-stationary base must be materialized to depth+1 levels");
    sq.tripled = triple_diagram(sq.skew.total, depth + 1);
  }

  std::vector<DiagramMorphism> actions;
  actions.reserve(g.order());
  for (int h = 0; h < g.order(); ++h)
    actions.push_back(induced_triple_automorphism(sq.tripled, sq.skew.action(h)));
  sq.quotient = quotient_by_action(sq.tripled.total, g, actions);
  const OrderedBratteliDiagram& qd = sq.quotient.quotient;

  // rho: orbit -> middle base vertex with the group coordinate dropped
  const int go = g.order();
  DiagramMorphism rho;
  rho.vertex_map.resize(depth + 1);
  rho.edge_map.resize(depth + 1);
  rho.vertex_map[0] = {0};
  for (int n = 1; n <= depth; ++n) {
    rho.vertex_map[n].resize(qd.diagram().level_size(n));
    for (int q = 0; q < qd.diagram().level_size(n); ++q) {
      const int rep = sq.quotient.representative[n][q];
      rho.vertex_map[n][q] = sq.tripled.triples[n][rep][1] / go;
    }
    rho.edge_map[n].resize(qd.diagram().edge_count(n));
    for (int e = 0; e < qd.diagram().edge_count(n); ++e) {
      const int rep = sq.quotient.edge_representative[n][e];
      rho.edge_map[n][e] = sq.tripled.edge_triples[n][rep][1] / go;
    }
  }
  sq.rho = std::move(rho);

  // mu = lambda o rho
  sq.mu = Labelling(g);
  for (int n = 1; n <= depth; ++n) {
    std::vector<int> values(qd.diagram().edge_count(n));
    for (int e = 0; e < qd.diagram().edge_count(n); ++e)
      values[e] = sq.lambda.value(n, sq.rho.edge_map[n][e]);
    sq.mu.set_level_values(n, std::move(values));
  }
  sq.quotient_skew = skew_product(qd, sq.mu);

  // phi: triple [(u,g1),(v,g2),(w,g3)] -> (orbit, g2)
  DiagramMorphism phi;
  phi.vertex_map.resize(depth + 1);
  phi.edge_map.resize(depth + 1);
  phi.vertex_map[0] = {0};
  for (int n = 1; n <= depth; ++n) {
    const auto& ts = sq.tripled.triples[n];
    phi.vertex_map[n].resize(ts.size());
    for (std::size_t t = 0; t < ts.size(); ++t)
      phi.vertex_map[n][t] =
          sq.quotient.orbit_of[n][static_cast<int>(t)] * go + ts[t][1] % go;
    const auto& es = sq.tripled.edge_triples[n];
    phi.edge_map[n].resize(es.size());
    for (std::size_t e = 0; e < es.size(); ++e)
      phi.edge_map[n][e] =
          sq.quotient.edge_orbit_of[n][static_cast<int>(e)] * go + es[e][1] % go;
  }
  sq.phi = std::move(phi);

  // rho': middle coordinate into the skew product
  DiagramMorphism rp;
  rp.vertex_map.resize(depth + 1);
  rp.edge_map.resize(depth + 1);
  rp.vertex_map[0] = {0};
  for (int n = 1; n <= depth; ++n) {
    rp.vertex_map[n].resize(sq.tripled.triples[n].size());
    for (std::size_t t = 0; t < sq.tripled.triples[n].size(); ++t)
      rp.vertex_map[n][t] = sq.tripled.triples[n][t][1];
    rp.edge_map[n].resize(sq.tripled.edge_triples[n].size());
    for (std::size_t e = 0; e < sq.tripled.edge_triples[n].size(); ++e)
      rp.edge_map[n][e] = sq.tripled.edge_triples[n][e][1];
  }
  sq.rho_prime = std::move(rp);

  // --- verification clauses ---
  add_clause("rho_morphism",
             validate_morphism(qd.diagram(), sq.base.diagram(), sq.rho).empty());
  add_clause("rho_prime_morphism",
             validate_morphism(sq.tripled.total.diagram(), sq.skew.total.diagram(),
                               sq.rho_prime)
                 .empty());
  add_clause("phi_morphism",
             validate_morphism(sq.tripled.total.diagram(),
                               sq.quotient_skew.total.diagram(), sq.phi)
                 .empty());
  add_clause("phi_bijective",
             bijective_per_level(sq.phi, sq.quotient_skew.total.diagram(), depth));
  add_clause("phi_order_preserving",
             check_order_preserving(sq.tripled.total, sq.quotient_skew.total, sq.phi,
                                    depth));

  {
    bool ok = true;
    for (int n = 1; n <= depth && ok; ++n)
      for (int e = 0; e < qd.diagram().edge_count(n) && ok; ++e)
        ok = sq.mu.value(n, e) == sq.lambda.value(n, sq.rho.edge_map[n][e]);
    add_clause("mu_equals_lambda_rho", ok);
  }

  {
    bool ok = true;
    for (int h = 0; h < go && ok; ++h) {
      const DiagramMorphism lhs = compose(sq.rho_prime, actions[h]);
      const DiagramMorphism rhs = compose(sq.skew.action(h), sq.rho_prime);
      ok = maps_equal(lhs, rhs, depth);
    }
    add_clause("rho_prime_equivariant", ok);
  }

  {
    bool ok = true;
    for (int h = 0; h < go && ok; ++h) {
      const DiagramMorphism lhs = compose(sq.phi, actions[h]);
      const DiagramMorphism rhs = compose(sq.quotient_skew.action(h), sq.phi);
      ok = maps_equal(lhs, rhs, depth);
    }
    add_clause("phi_transports_action", ok);
  }

  {
    const DiagramMorphism lhs = compose(sq.skew.projection, sq.rho_prime);
    const DiagramMorphism rhs =
        compose(sq.rho, compose(sq.quotient_skew.projection, sq.phi));
    add_clause("square_commutes", maps_equal(lhs, rhs, depth));
  }

  add_clause("ulp_pi", check_unique_path_lifting(sq.skew.total.diagram(),
                                                 sq.base.diagram(),
                                                 sq.skew.projection, depth)
                           .holds);
  add_clause("ulp_rho", check_unique_path_lifting(qd.diagram(), sq.base.diagram(),
                                                  sq.rho, depth)
                            .holds);
  add_clause("ulp_rho_prime",
             check_unique_path_lifting(sq.tripled.total.diagram(),
                                       sq.skew.total.diagram(), sq.rho_prime, depth)
                 .holds);
  add_clause("ulp_pi_tilde",
             check_unique_path_lifting(sq.quotient_skew.total.diagram(),
                                       qd.diagram(), sq.quotient_skew.projection,
                                       depth)
                 .holds);

  {
    const LoopsReport loops = check_loops_lift(qd, sq.mu, depth);
    add_clause("loops_lift_pi_tilde", loops.holds,
               loops.holds ? "" : "witness at k=" + std::to_string(loops.witness->k));
  }

  {
    bool ok = true;
    // orbit sizes are |G| exactly when the action is free; freeness was
    // verified during quotient construction
    for (int n = 1; n <= depth && ok; ++n)
      ok = static_cast<int>(sq.quotient.representative[n].size()) * go ==
           sq.tripled.total.diagram().level_size(n);
    add_clause("orbit_sizes", ok);
  }

  return sq;
}

QuotientCocycle cocycle_from_square(const CommutingSquare& square, int level) {
  if (level < 1 || level > square.depth)
    throw Error("depth", "cocycle level outside the square's depth");
  const FiniteGroup& g = square.lambda.group();
  const int go = g.order();
  QuotientCocycle c;
  c.level = level;
  const auto& reps = square.quotient.representative[level];
  c.bottom_value.resize(reps.size());
  for (std::size_t q = 0; q < reps.size(); ++q) {
    const auto& t = square.tripled.triples[level][reps[q]];
    const int g1 = t[0] % go;
    const int g2 = t[1] % go;
    const int value = g.op(g.inverse(g1), g2);
    // representative independence: translating the triple leaves the value fixed
    for (int h = 0; h < go; ++h) {
      const int v1 = g.op(h, g1);
      const int v2 = g.op(h, g2);
      if (g.op(g.inverse(v1), v2) != value)
        throw Error("argument", "cocycle value depends on the representative");
    }
    c.bottom_value[q] = value;
  }
  return c;
}

int cocycle_value(const QuotientCocycle& c, int quotient_vertex, long long floor_rank,
                  const FiniteGroup& g) {
  if (floor_rank == 0) return c.bottom_value[quotient_vertex];
  return g.identity();
}

}  // namespace adic
