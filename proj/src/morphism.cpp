#include "adic/morphism.hpp"

#include <algorithm>

namespace adic {

DiagramMorphism identity_morphism(const BratteliDiagram& d) {
  DiagramMorphism m;
  m.vertex_map.resize(d.depth() + 1);
  m.edge_map.resize(d.depth() + 1);
  for (int n = 0; n <= d.depth(); ++n) {
    m.vertex_map[n].resize(d.level_size(n));
    for (int v = 0; v < d.level_size(n); ++v) m.vertex_map[n][v] = v;
    if (n >= 1) {
      m.edge_map[n].resize(d.edge_count(n));
      for (int e = 0; e < d.edge_count(n); ++e) m.edge_map[n][e] = e;
    }
  }
  return m;
}

DiagramMorphism compose(const DiagramMorphism& outer, const DiagramMorphism& inner) {
  DiagramMorphism m;
  const int depth = std::min(outer.depth(), inner.depth());
  m.vertex_map.resize(depth + 1);
  m.edge_map.resize(depth + 1);
  for (int n = 0; n <= depth; ++n) {
    m.vertex_map[n].resize(inner.vertex_map[n].size());
    for (std::size_t v = 0; v < inner.vertex_map[n].size(); ++v)
      m.vertex_map[n][v] = outer.vertex_map[n][inner.vertex_map[n][v]];
    if (n >= 1) {
      m.edge_map[n].resize(inner.edge_map[n].size());
      for (std::size_t e = 0; e < inner.edge_map[n].size(); ++e)
        m.edge_map[n][e] = outer.edge_map[n][inner.edge_map[n][e]];
    }
  }
  return m;
}

std::vector<Violation> validate_morphism(const BratteliDiagram& src,
                                         const BratteliDiagram& dst,
                                         const DiagramMorphism& m) {
  std::vector<Violation> out;
  const int depth = std::min({src.depth(), dst.depth(), m.depth()});
  if (m.depth() < std::min(src.depth(), dst.depth()))
    out.push_back({m.depth(), 0, "morphism covers fewer levels than both diagrams"});
  for (int n = 0; n <= depth; ++n) {
    if (static_cast<int>(m.vertex_map[n].size()) != src.level_size(n)) {
      out.push_back({n, 0, "vertex map has wrong size"});
      return out;
    }
    for (int v = 0; v < src.level_size(n); ++v) {
      const int w = m.vertex_map[n][v];
      if (w < 0 || w >= dst.level_size(n))
        out.push_back({n, v, "vertex image out of range"});
    }
    if (n == 0) continue;
    if (static_cast<int>(m.edge_map[n].size()) != src.edge_count(n)) {
      out.push_back({n, 0, "edge map has wrong size"});
      return out;
    }
    for (int e = 0; e < src.edge_count(n); ++e) {
      const int f = m.edge_map[n][e];
      if (f < 0 || f >= dst.edge_count(n)) {
        out.push_back({n, e, "edge image out of range"});
        continue;
      }
      const Edge& up = src.edge(n, e);
      const Edge& down = dst.edge(n, f);
      if (down.range != m.vertex_map[n][up.range])
        out.push_back({n, e, "range not intertwined"});
      if (down.source != m.vertex_map[n - 1][up.source])
        out.push_back({n, e, "source not intertwined"});
    }
  }
  return out;
}

UlpReport check_unique_path_lifting(const BratteliDiagram& src,
                                    const BratteliDiagram& dst,
                                    const DiagramMorphism& m, int depth) {
  UlpReport report;
  report.depth = depth;
  if (depth > std::min({src.depth(), dst.depth(), m.depth()}))
    throw Error("depth", "unique-path-lifting check past materialized depth");
  for (int n = 1; n <= depth; ++n) {
    for (int v = 0; v < src.level_size(n); ++v) {
      const int w = m.vertex_map[n][v];
      std::vector<int> count(dst.edge_count(n), 0);
      for (int e : src.incoming(n, v)) ++count[m.edge_map[n][e]];
      for (int f = 0; f < dst.edge_count(n); ++f) {
        const bool into_w = dst.edge(n, f).range == w;
        const int expected = into_w ? 1 : 0;
        if (count[f] != expected) {
          report.holds = false;
          report.witness = UlpWitness{n, v, f, count[f]};
          return report;
        }
      }
    }
  }
  return report;
}

Path lift_path(const BratteliDiagram& src, const BratteliDiagram& dst,
               const DiagramMorphism& m, const Path& down, int target_up_vertex) {
  if (!path_valid(dst, down)) throw Error("argument", "invalid downstairs path");
  const int top = down.end_level();
  if (top > m.depth() || top > src.depth())
    throw Error("depth", "lift requested past materialized depth");
  if (m.vertex_map[top][target_up_vertex] != path_range(dst, down))
    throw Error("argument", "target vertex does not lie over the path's range");
  Path up;
  up.start_level = down.start_level;
  up.edges.resize(down.edges.size());
  int at = target_up_vertex;
  for (int i = static_cast<int>(down.edges.size()) - 1; i >= 0; --i) {
    const int level = down.start_level + 1 + i;
    const int want = down.edges[i];
    int found = -1;
    for (int e : src.incoming(level, at)) {
      if (m.edge_map[level][e] == want) {
        if (found >= 0)
          throw Error("uniqueness", "two lifts of edge " + std::to_string(want) +
                                        " at level " + std::to_string(level));
        found = e;
      }
    }
    if (found < 0)
      throw Error("lifting", "no lift of edge " + std::to_string(want) +
                                 " at level " + std::to_string(level));
    up.edges[i] = found;
    at = src.edge(level, found).source;
  }
  return up;
}

}  // namespace adic
