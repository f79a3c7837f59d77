#include "adic/ordering.hpp"

#include <algorithm>
#include <map>

namespace adic {

OrderedBratteliDiagram::OrderedBratteliDiagram(BratteliDiagram d) : d_(std::move(d)) {
  order_.resize(d_.depth() + 1);
  rank_.resize(d_.depth() + 1);
  for (int n = 1; n <= d_.depth(); ++n) {
    order_[n].resize(d_.level_size(n));
    for (int v = 0; v < d_.level_size(n); ++v) order_[n][v] = d_.incoming(n, v);
    rebuild_ranks(n);
  }
}

void OrderedBratteliDiagram::rebuild_ranks(int level) {
  rank_[level].assign(d_.edge_count(level), -1);
  for (int v = 0; v < d_.level_size(level); ++v)
    for (std::size_t r = 0; r < order_[level][v].size(); ++r)
      rank_[level][order_[level][v][r]] = static_cast<int>(r);
}

void OrderedBratteliDiagram::set_order(int level, int vertex, std::vector<int> order) {
  const std::vector<int>& declared = d_.incoming(level, vertex);
  std::vector<int> a = declared, b = order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b)
    throw Error("argument", "order at level " + std::to_string(level) +
                                " vertex " + std::to_string(vertex) +
                                " is not a permutation of the incoming edges");
  order_[level][vertex] = std::move(order);
  rebuild_ranks(level);
}

const std::vector<int>& OrderedBratteliDiagram::incoming_ordered(int level,
                                                                 int vertex) const {
  d_.incoming(level, vertex);  // bounds check
  return order_[level][vertex];
}

int OrderedBratteliDiagram::rank_of(int level, int edge) const {
  d_.edge(level, edge);
  return rank_[level][edge];
}

int OrderedBratteliDiagram::degree(int level, int vertex) const {
  return static_cast<int>(incoming_ordered(level, vertex).size());
}

int OrderedBratteliDiagram::edge_at_rank(int level, int vertex, int rank) const {
  const auto& ord = incoming_ordered(level, vertex);
  if (rank < 0 || rank >= static_cast<int>(ord.size()))
    throw Error("argument", "rank out of range");
  return ord[rank];
}

int OrderedBratteliDiagram::min_edge(int level, int vertex) const {
  return edge_at_rank(level, vertex, 0);
}

int OrderedBratteliDiagram::max_edge(int level, int vertex) const {
  return edge_at_rank(level, vertex, degree(level, vertex) - 1);
}

bool OrderedBratteliDiagram::is_max(int level, int edge) const {
  const Edge& e = d_.edge(level, edge);
  return max_edge(level, e.range) == edge;
}

bool OrderedBratteliDiagram::is_min(int level, int edge) const {
  const Edge& e = d_.edge(level, edge);
  return min_edge(level, e.range) == edge;
}

void OrderedBratteliDiagram::extend_to(int new_depth) {
  if (new_depth <= d_.depth()) return;
  const int old_depth = d_.depth();
  const auto block_orders = order_[old_depth];
  d_.extend_to(new_depth);
  order_.resize(d_.depth() + 1, block_orders);
  rank_.resize(d_.depth() + 1);
  for (int n = old_depth + 1; n <= d_.depth(); ++n) rebuild_ranks(n);
}

int compare_paths(const OrderedBratteliDiagram& od, const Path& a, const Path& b) {
  if (a.start_level != b.start_level || a.edges.size() != b.edges.size())
    throw Error("argument", "paths are not comparable (different spans)");
  if (path_range(od.diagram(), a) != path_range(od.diagram(), b))
    throw Error("argument", "paths are not comparable (different ranges)");
  for (int i = static_cast<int>(a.edges.size()) - 1; i >= 0; --i) {
    const int level = a.start_level + 1 + i;
    const int ra = od.rank_of(level, a.edges[i]);
    const int rb = od.rank_of(level, b.edges[i]);
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  return 0;
}

std::vector<Path> enumerate_paths(const OrderedBratteliDiagram& od, int from_level,
                                  int to_level, int to_vertex) {
  const BratteliDiagram& d = od.diagram();
  if (from_level < 0 || to_level > d.depth() || from_level >= to_level)
    throw Error("depth", "path span outside materialized levels");
  d.incoming(to_level, to_vertex);  // bounds check
  std::vector<Path> out;
  if (to_level == from_level + 1) {
    for (int e : od.incoming_ordered(to_level, to_vertex))
      out.push_back(Path{from_level, {e}});
    return out;
  }
  for (int e : od.incoming_ordered(to_level, to_vertex)) {
    const int src = d.edge(to_level, e).source;
    for (Path& p : enumerate_paths(od, from_level, to_level - 1, src)) {
      p.edges.push_back(e);
      out.push_back(std::move(p));
    }
  }
  return out;
}

Path extremal_path_from(const OrderedBratteliDiagram& od, int from_level,
                        int to_level, int vertex, Extreme which) {
  if (from_level < 0 || from_level >= to_level)
    throw Error("argument", "extremal path needs from_level < to_level");
  Path p;
  p.start_level = from_level;
  p.edges.resize(to_level - from_level);
  int at = vertex;
  for (int level = to_level; level > from_level; --level) {
    const int e = which == Extreme::min ? od.min_edge(level, at)
                                        : od.max_edge(level, at);
    p.edges[level - from_level - 1] = e;
    at = od.diagram().edge(level, e).source;
  }
  return p;
}

Path extremal_path(const OrderedBratteliDiagram& od, int level, int vertex,
                   Extreme which) {
  return extremal_path_from(od, 0, level, vertex, which);
}

std::optional<Path> successor_path(const OrderedBratteliDiagram& od, const Path& p) {
  const BratteliDiagram& d = od.diagram();
  if (!path_valid(d, p)) throw Error("argument", "invalid path");
  for (std::size_t j = 0; j < p.edges.size(); ++j) {
    const int level = p.start_level + 1 + static_cast<int>(j);
    const int e = p.edges[j];
    const int v = d.edge(level, e).range;
    const int rank = od.rank_of(level, e);
    if (rank + 1 >= od.degree(level, v)) continue;
    const int f = od.edge_at_rank(level, v, rank + 1);
    Path out;
    out.start_level = p.start_level;
    if (j > 0) {
      out.edges = extremal_path_from(od, p.start_level, level - 1,
                                     d.edge(level, f).source, Extreme::min)
                      .edges;
    }
    out.edges.push_back(f);
    out.edges.insert(out.edges.end(), p.edges.begin() + j + 1, p.edges.end());
    return out;
  }
  return std::nullopt;
}

std::optional<Path> vershik_step(const OrderedBratteliDiagram& od, const Path& p,
                                 VershikOptions opt) {
  if (p.start_level != 0)
    throw Error("argument", "vershik step applies to paths from the root");
  auto next = successor_path(od, p);
  if (next || !opt.wrap) return next;
  const ProperReport proper =
      check_properly_ordered(od, ProperMode::exact_stationary);
  if (!proper.properly_ordered)
    throw Error("mode", "wrap requires a properly ordered stationary diagram");
  // Only the truncation of the unique infinite maximal path has the minimal
  // path as successor; other all-maximal paths are undetermined at this depth.
  if (path_range(od.diagram(), p) != proper.max_thread_vertex) return std::nullopt;
  return extremal_path(od, p.end_level(), proper.min_thread_vertex, Extreme::min);
}

namespace {

// source of the extremal edge into each vertex, computed on a block level
std::vector<int> extremal_source_map(const OrderedBratteliDiagram& od, int level,
                                     Extreme which) {
  std::vector<int> f(od.diagram().level_size(level));
  for (int v = 0; v < od.diagram().level_size(level); ++v) {
    const int e = which == Extreme::min ? od.min_edge(level, v)
                                        : od.max_edge(level, v);
    f[v] = od.diagram().edge(level, e).source;
  }
  return f;
}

int count_periodic_points(const std::vector<int>& f, int* fixed_point) {
  const int n = static_cast<int>(f.size());
  int count = 0;
  *fixed_point = -1;
  for (int v = 0; v < n; ++v) {
    int x = v;
    for (int step = 0; step < n; ++step) {
      x = f[x];
      if (x == v) {
        ++count;
        if (f[v] == v) *fixed_point = v;
        break;
      }
    }
  }
  return count;
}

}  // namespace

ProperReport check_properly_ordered(const OrderedBratteliDiagram& od,
                                    ProperMode mode, int depth) {
  ProperReport report;
  report.mode = mode;
  const BratteliDiagram& d = od.diagram();
  if (mode == ProperMode::exact_stationary) {
    if (!d.stationary())
      throw Error("mode", "exact proper-ordering check requires a stationary diagram");
    if (d.depth() < 2 || d.level_size(d.depth()) != d.level_size(d.depth() - 1))
      throw Error("mode", "stationary block not materialized (need depth >= 2)");
    const int block = d.depth();
    const auto fmax = extremal_source_map(od, block, Extreme::max);
    const auto fmin = extremal_source_map(od, block, Extreme::min);
    report.max_periodic_points = count_periodic_points(fmax, &report.max_thread_vertex);
    report.min_periodic_points = count_periodic_points(fmin, &report.min_thread_vertex);
    report.simplicity = check_simple(d, (d.level_size(block) - 1) *
                                            (d.level_size(block) - 1) + 2);
    report.decided = true;
    report.properly_ordered =
        report.max_periodic_points == 1 && report.min_periodic_points == 1 &&
        report.simplicity.status == SimpleStatus::simple_with_gap;
    return report;
  }
  if (depth < 2 || depth > d.depth())
    throw Error("depth", "bounded proper-ordering check needs 2 <= depth <= materialized");
  for (Extreme which : {Extreme::max, Extreme::min}) {
    std::vector<int> image(d.level_size(depth));
    for (int v = 0; v < d.level_size(depth); ++v) image[v] = v;
    auto& counts = which == Extreme::max ? report.max_tail_counts
                                         : report.min_tail_counts;
    counts.assign(depth, 0);
    for (int n = depth; n >= 1; --n) {
      std::vector<int> distinct = image;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      counts[n - 1] = static_cast<int>(distinct.size());
      if (n == 1) break;
      const auto f = extremal_source_map(od, n, which);
      for (int& v : image) v = f[v];
    }
  }
  report.decided = false;
  return report;
}

TowerTrace tower_trace(const OrderedBratteliDiagram& od, int top_level,
                       int top_vertex, int base_level) {
  const BratteliDiagram& d = od.diagram();
  if (base_level < 1 || base_level > top_level || top_level > d.depth())
    throw Error("depth", "tower trace needs 1 <= base_level <= top_level <= depth");
  const auto heights = tower_heights(d, base_level);
  // floors per (level, vertex), built bottom-up level by level
  std::vector<std::vector<std::vector<TowerFloor>>> memo(top_level + 1);
  memo[base_level].resize(d.level_size(base_level));
  for (int v = 0; v < d.level_size(base_level); ++v) {
    auto& floors = memo[base_level][v];
    floors.resize(heights[v]);
    for (long long r = 0; r < heights[v]; ++r) floors[r] = TowerFloor{v, r};
  }
  for (int n = base_level + 1; n <= top_level; ++n) {
    memo[n].resize(d.level_size(n));
    for (int v = 0; v < d.level_size(n); ++v) {
      auto& floors = memo[n][v];
      for (int e : od.incoming_ordered(n, v)) {
        const auto& below = memo[n - 1][d.edge(n, e).source];
        floors.insert(floors.end(), below.begin(), below.end());
      }
    }
  }
  TowerTrace trace;
  trace.top_level = top_level;
  trace.top_vertex = top_vertex;
  trace.base_level = base_level;
  trace.floors = std::move(memo[top_level][top_vertex]);
  return trace;
}

std::vector<int> trace_visits(const OrderedBratteliDiagram& od,
                              const TowerTrace& trace) {
  const auto heights = tower_heights(od.diagram(), trace.base_level);
  std::vector<int> visits;
  std::size_t i = 0;
  while (i < trace.floors.size()) {
    const int v = trace.floors[i].vertex;
    const long long h = heights[v];
    for (long long r = 0; r < h; ++r) {
      if (i >= trace.floors.size() || trace.floors[i].vertex != v ||
          trace.floors[i].rank != r)
        throw Error("argument", "trace does not decompose into complete towers");
      ++i;
    }
    visits.push_back(v);
  }
  return visits;
}

TelescopeResult telescope(const OrderedBratteliDiagram& od,
                          const std::vector<int>& cuts) {
  const BratteliDiagram& d = od.diagram();
  if (cuts.empty() || cuts[0] != 0)
    throw Error("argument", "cut levels must start at 0");
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (cuts[i] <= cuts[i - 1])
      throw Error("argument", "cut levels must be strictly increasing");
  if (cuts.back() > d.depth())
    throw Error("depth", "cut level past materialized depth");

  TelescopeResult result;
  BratteliDiagram out;
  result.edge_paths.resize(cuts.size());
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    const int lo = cuts[k - 1];
    const int hi = cuts[k];
    std::vector<Edge> edges;
    std::vector<Path> paths;
    for (int v = 0; v < d.level_size(hi); ++v) {
      for (Path& p : enumerate_paths(od, lo, hi, v)) {
        edges.push_back(Edge{path_source(d, p), v});
        paths.push_back(std::move(p));
      }
    }
    out.add_level(d.level_size(hi), std::move(edges));
    result.edge_paths[k] = std::move(paths);
  }
  result.diagram = OrderedBratteliDiagram(std::move(out));
  return result;
}

bool check_order_preserving(const OrderedBratteliDiagram& src,
                            const OrderedBratteliDiagram& dst,
                            const DiagramMorphism& m, int depth) {
  for (int n = 1; n <= depth; ++n) {
    for (int v = 0; v < src.diagram().level_size(n); ++v) {
      const int w = m.vertex_map[n][v];
      const auto& up = src.incoming_ordered(n, v);
      const auto& down = dst.incoming_ordered(n, w);
      if (up.size() != down.size()) return false;
      for (std::size_t i = 0; i < up.size(); ++i)
        if (m.edge_map[n][up[i]] != down[i]) return false;
    }
  }
  return true;
}

bool check_level_isomorphism(const OrderedBratteliDiagram& src,
                             const OrderedBratteliDiagram& dst,
                             const std::vector<std::vector<int>>& vertex_bijection,
                             int depth) {
  const BratteliDiagram& a = src.diagram();
  const BratteliDiagram& b = dst.diagram();
  if (depth > a.depth() || depth > b.depth()) throw Error("depth", "not materialized");
  for (int n = 0; n <= depth; ++n) {
    if (a.level_size(n) != b.level_size(n)) return false;
    std::vector<bool> hit(b.level_size(n), false);
    for (int v = 0; v < a.level_size(n); ++v) {
      const int w = vertex_bijection[n][v];
      if (w < 0 || w >= b.level_size(n) || hit[w]) return false;
      hit[w] = true;
    }
  }
  for (int n = 1; n <= depth; ++n) {
    if (a.edge_count(n) != b.edge_count(n)) return false;
    for (int v = 0; v < a.level_size(n); ++v) {
      const int w = vertex_bijection[n][v];
      const auto& ea = src.incoming_ordered(n, v);
      const auto& eb = dst.incoming_ordered(n, w);
      if (ea.size() != eb.size()) return false;
      for (std::size_t i = 0; i < ea.size(); ++i) {
        const int sa = vertex_bijection[n - 1][a.edge(n, ea[i]).source];
        if (sa != b.edge(n, eb[i]).source) return false;
      }
    }
  }
  return true;
}

}  // namespace adic
