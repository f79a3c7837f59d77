#include "adic/diagram.hpp"

#include <algorithm>

namespace adic {

int BratteliDiagram::add_level(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count <= 0)
    throw Error("argument", "level must have at least one vertex");
  const int below = level_sizes_.back();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.source < 0 || e.source >= below)
      throw Error("argument", "edge " + std::to_string(i) +
                                  " has source outside the previous level");
    if (e.range < 0 || e.range >= vertex_count)
      throw Error("argument",
                  "edge " + std::to_string(i) + " has range outside the new level");
  }
  std::vector<std::vector<int>> inc(vertex_count);
  for (std::size_t i = 0; i < edges.size(); ++i)
    inc[edges[i].range].push_back(static_cast<int>(i));
  level_sizes_.push_back(vertex_count);
  edges_.push_back(std::move(edges));
  incoming_.push_back(std::move(inc));
  return depth();
}

int BratteliDiagram::level_size(int level) const {
  if (level < 0 || level > depth())
    throw Error("depth", "level " + std::to_string(level) +
                             " not materialized (depth " +
                             std::to_string(depth()) + ")");
  return level_sizes_[level];
}

int BratteliDiagram::edge_count(int level) const {
  return static_cast<int>(level_edges(level).size());
}

const std::vector<Edge>& BratteliDiagram::level_edges(int level) const {
  if (level < 1 || level > depth())
    throw Error("depth", "edge level " + std::to_string(level) +
                             " not materialized (depth " +
                             std::to_string(depth()) + ")");
  return edges_[level];
}

const Edge& BratteliDiagram::edge(int level, int index) const {
  const auto& es = level_edges(level);
  if (index < 0 || index >= static_cast<int>(es.size()))
    throw Error("argument", "no edge " + std::to_string(index) + " at level " +
                                std::to_string(level));
  return es[index];
}

const std::vector<int>& BratteliDiagram::incoming(int level, int vertex) const {
  if (level < 1 || level > depth())
    throw Error("depth", "level " + std::to_string(level) + " not materialized");
  if (vertex < 0 || vertex >= level_sizes_[level])
    throw Error("argument", "no vertex " + std::to_string(vertex) +
                                " at level " + std::to_string(level));
  return incoming_[level][vertex];
}

void BratteliDiagram::extend_to(int new_depth) {
  if (new_depth <= depth()) return;
  if (!stationary_)
    throw Error("depth",
                "diagram is not stationary; cannot extend past declared levels");
  if (depth() < 1)
    throw Error("depth", "no edge block to repeat");
  if (depth() >= 2 && level_sizes_[depth()] != level_sizes_[depth() - 1])
    throw Error("depth",
                "stationary extension requires equal consecutive level sizes");
  const std::vector<Edge> block = edges_[depth()];
  const int size = level_sizes_[depth()];
  while (depth() < new_depth) add_level(size, block);
}

std::vector<Violation> validate(const BratteliDiagram& d) {
  std::vector<Violation> out;
  for (int n = 1; n <= d.depth(); ++n) {
    std::vector<int> outgoing(d.level_size(n - 1), 0);
    for (const Edge& e : d.level_edges(n)) ++outgoing[e.source];
    for (int v = 0; v < d.level_size(n - 1); ++v)
      if (outgoing[v] == 0)
        out.push_back({n - 1, v, "s^-1(v) empty: no outgoing edge"});
    for (int v = 0; v < d.level_size(n); ++v)
      if (d.incoming(n, v).empty())
        out.push_back({n, v, "r^-1(v) empty: no incoming edge"});
  }
  return out;
}

int path_source(const BratteliDiagram& d, const Path& p) {
  if (p.edges.empty()) throw Error("argument", "empty path");
  return d.edge(p.start_level + 1, p.edges.front()).source;
}

int path_range(const BratteliDiagram& d, const Path& p) {
  if (p.edges.empty()) throw Error("argument", "empty path");
  return d.edge(p.end_level(), p.edges.back()).range;
}

bool path_valid(const BratteliDiagram& d, const Path& p) {
  if (p.edges.empty()) return false;
  if (p.start_level < 0 || p.end_level() > d.depth()) return false;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const int level = p.start_level + 1 + static_cast<int>(i);
    if (p.edges[i] < 0 || p.edges[i] >= d.edge_count(level)) return false;
    if (i > 0 && d.edge(level, p.edges[i]).source !=
                     d.edge(level - 1, p.edges[i - 1]).range)
      return false;
  }
  return true;
}

Path truncate_path(const Path& p, int to_level) {
  if (to_level < p.start_level || to_level > p.end_level())
    throw Error("argument", "truncation level outside the path");
  Path q;
  q.start_level = p.start_level;
  q.edges.assign(p.edges.begin(),
                 p.edges.begin() + (to_level - p.start_level));
  return q;
}

std::vector<long long> tower_heights(const BratteliDiagram& d, int level) {
  if (level < 0 || level > d.depth()) throw Error("depth", "level not materialized");
  std::vector<long long> h{1};
  for (int n = 1; n <= level; ++n) {
    std::vector<long long> next(d.level_size(n), 0);
    for (const Edge& e : d.level_edges(n)) next[e.range] += h[e.source];
    h = std::move(next);
  }
  return h;
}

long long count_paths_to(const BratteliDiagram& d, int from_level, int to_level,
                         int to_vertex) {
  if (from_level < 0 || to_level > d.depth() || from_level >= to_level)
    throw Error("depth", "path levels outside materialized range");
  std::vector<long long> h(d.level_size(from_level), 1);
  for (int n = from_level + 1; n <= to_level; ++n) {
    std::vector<long long> next(d.level_size(n), 0);
    for (const Edge& e : d.level_edges(n)) next[e.range] += h[e.source];
    h = std::move(next);
  }
  return h[to_vertex];
}

std::vector<std::vector<long long>> incidence_matrix(const BratteliDiagram& d,
                                                     int level) {
  std::vector<std::vector<long long>> m(
      d.level_size(level), std::vector<long long>(d.level_size(level - 1), 0));
  for (const Edge& e : d.level_edges(level)) ++m[e.range][e.source];
  return m;
}

namespace {

using BoolMatrix = std::vector<std::vector<bool>>;

BoolMatrix positive(const std::vector<std::vector<long long>>& m) {
  BoolMatrix b(m.size(), std::vector<bool>(m.empty() ? 0 : m[0].size(), false));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) b[i][j] = m[i][j] > 0;
  return b;
}

// c = a * b over booleans
BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b) {
  const std::size_t rows = a.size(), mid = b.size(), cols = b.empty() ? 0 : b[0].size();
  BoolMatrix c(rows, std::vector<bool>(cols, false));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < mid; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < cols; ++j)
          if (b[k][j]) c[i][j] = true;
  return c;
}

bool all_positive(const BoolMatrix& m) {
  for (const auto& row : m)
    for (bool v : row)
      if (!v) return false;
  return true;
}

}  // namespace

SimpleReport check_simple(const BratteliDiagram& d, int max_gap) {
  SimpleReport report;
  report.tested_depth = d.depth();
  if (max_gap < 1) throw Error("argument", "max_gap must be at least 1");

  const bool square_tail =
      d.depth() >= 1 && d.level_size(d.depth()) == d.level_size(d.depth() - 1);
  if (d.stationary() && square_tail) {
    // The tail repeats the last block; connectivity over g levels inside the
    // tail is positivity of M^g. The materialized prefix is checked directly.
    const int top = d.depth();
    const BoolMatrix m = positive(incidence_matrix(d, top));
    const int size = static_cast<int>(m.size());
    int wielandt = -1;
    {
      BoolMatrix pow = m;
      const int bound = (size - 1) * (size - 1) + 1;
      for (int k = 1; k <= bound; ++k) {
        if (all_positive(pow)) {
          wielandt = k;
          break;
        }
        pow = bool_mul(pow, m);
      }
    }
    if (wielandt < 0) {
      report.status = SimpleStatus::refuted_stationary;
      report.exact = true;
      return report;
    }
    // Least g that also clears every materialized level. Products that reach
    // past the declared levels use the repeating block.
    auto block_at = [&](int n) -> BoolMatrix {
      return positive(incidence_matrix(d, std::min(n, top)));
    };
    const int g_bound = wielandt + top + 1;
    for (int g = 1; g <= g_bound; ++g) {
      bool ok = true;
      for (int n = 1; n <= top && ok; ++n) {
        BoolMatrix prod = block_at(n + g);
        for (int lev = n + g - 1; lev > n; --lev) prod = bool_mul(prod, block_at(lev));
        ok = all_positive(prod);
      }
      if (ok) {
        report.status = SimpleStatus::simple_with_gap;
        report.gap = g;
        report.exact = true;
        return report;
      }
    }
    report.status = SimpleStatus::refuted_stationary;
    report.exact = true;
    return report;
  }

  for (int g = 1; g <= max_gap; ++g) {
    if (g >= d.depth()) break;
    bool ok = true;
    for (int n = 1; n + g <= d.depth() && ok; ++n) {
      BoolMatrix prod = positive(incidence_matrix(d, n + g));
      for (int lev = n + g - 1; lev > n; --lev)
        prod = bool_mul(prod, positive(incidence_matrix(d, lev)));
      ok = all_positive(prod);
    }
    if (ok) {
      report.status = SimpleStatus::simple_with_gap;
      report.gap = g;
      return report;
    }
  }
  return report;
}

}  // namespace adic
