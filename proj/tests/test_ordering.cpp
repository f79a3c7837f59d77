#include "doctest.h"

#include <map>
#include <random>

#include "adic/ordering.hpp"
#include "adic/substitution.hpp"
#include "test_util.hpp"

using namespace adic;
using testutil::random_ordered_diagram;
using testutil::sorted_paths_oracle;

namespace {

Substitution xxy() { return Substitution({"X", "Y"}, {{0, 0, 1}, {0, 1, 1}}); }

OrderedBratteliDiagram hand_odometer(int depth) {
  BratteliDiagram d;
  for (int n = 1; n <= depth; ++n) d.add_level(1, {Edge{0, 0}, Edge{0, 0}});
  d.set_stationary(true);
  return OrderedBratteliDiagram(std::move(d));
}

}  // namespace

TEST_CASE("successor of a single edge steps through the incoming order") {
  const auto od = diagram_from_substitution(xxy(), 3);
  // edges into X at level 2 are 0 < 1 < 2
  const Path first{1, {0}};
  const auto second = successor_path(od, first);
  REQUIRE(second.has_value());
  CHECK(second->edges == std::vector<int>{1});
  const auto third = successor_path(od, *second);
  REQUIRE(third.has_value());
  CHECK(third->edges == std::vector<int>{2});
  CHECK_FALSE(successor_path(od, *third).has_value());
}

TEST_CASE("extremal paths") {
  const auto od = diagram_from_substitution(xxy(), 3);
  SUBCASE("maximal path to X at level 2 ends with the third edge, over Y") {
    const Path p = extremal_path(od, 2, 0, Extreme::max);
    REQUIRE(p.edges.size() == 2);
    CHECK(p.edges[1] == 2);                               // the Y -> X edge
    CHECK(od.diagram().edge(2, p.edges[1]).source == 1);  // source Y
    CHECK(p.edges[0] == 1);                               // root edge into Y
  }
  SUBCASE("successor of the maximal path signals maximal") {
    for (int v = 0; v < 2; ++v) {
      const Path p = extremal_path(od, 3, v, Extreme::max);
      CHECK_FALSE(successor_path(od, p).has_value());
      const Path q = extremal_path(od, 3, v, Extreme::min);
      for (std::size_t i = 0; i < q.edges.size(); ++i)
        CHECK(od.is_min(static_cast<int>(i) + 1, q.edges[i]));
    }
  }
  SUBCASE("odometer extremal paths are the constant min/max sequences") {
    const auto om = hand_odometer(4);
    CHECK(extremal_path(om, 4, 0, Extreme::max).edges ==
          std::vector<int>{1, 1, 1, 1});
    CHECK(extremal_path(om, 4, 0, Extreme::min).edges ==
          std::vector<int>{0, 0, 0, 0});
  }
}

TEST_CASE("vershik step is binary increment on the odometer") {
  const auto om = hand_odometer(3);
  Path p = extremal_path(om, 3, 0, Extreme::min);
  // floors in order: 000, 100, 010, 110, 001, 101, 011, 111 (least digit first)
  const std::vector<std::vector<int>> expect = {
      {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
      {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(p.edges == expect[i]);
    auto next = vershik_step(om, p);
    if (i + 1 < expect.size()) {
      REQUIRE(next.has_value());
      p = *next;
    } else {
      CHECK_FALSE(next.has_value());
    }
  }
  SUBCASE("wrap returns the minimal path on the properly ordered odometer") {
    const Path top = extremal_path(om, 3, 0, Extreme::max);
    const auto wrapped = vershik_step(om, top, VershikOptions{true});
    REQUIRE(wrapped.has_value());
    CHECK(*wrapped == extremal_path(om, 3, 0, Extreme::min));
  }
}

TEST_CASE("proper ordering") {
  SUBCASE("odometer is properly ordered") {
    const auto r = check_properly_ordered(hand_odometer(3), ProperMode::exact_stationary);
    CHECK(r.decided);
    CHECK(r.properly_ordered);
  }
  SUBCASE("two-letter system: max sources X->Y, Y->Y; min sources X->X, Y->X") {
    const auto od = diagram_from_substitution(xxy(), 3);
    const auto r = check_properly_ordered(od, ProperMode::exact_stationary);
    CHECK(r.decided);
    CHECK(r.properly_ordered);
    CHECK(r.max_periodic_points == 1);
    CHECK(r.min_periodic_points == 1);
    CHECK(r.max_thread_vertex == 1);  // Y
    CHECK(r.min_thread_vertex == 0);  // X
  }
  SUBCASE("self-loop maximal edges at both letters break proper ordering") {
    // images end with their own letter, so both maximal edges are loops
    const auto bad = diagram_from_substitution(
        Substitution({"X", "Y"}, {{1, 0}, {0, 1}}), 3);
    const auto r = check_properly_ordered(bad, ProperMode::exact_stationary);
    CHECK(r.decided);
    CHECK(r.max_periodic_points == 2);
    CHECK_FALSE(r.properly_ordered);
  }
  SUBCASE("wrap from the maximal thread lands on the minimal thread") {
    auto od = diagram_from_substitution(xxy(), 3);
    const Path top = extremal_path(od, 3, 1, Extreme::max);  // thread vertex Y
    const auto wrapped = vershik_step(od, top, VershikOptions{true});
    REQUIRE(wrapped.has_value());
    CHECK(*wrapped == extremal_path(od, 3, 0, Extreme::min));
    // an all-max path to the non-thread vertex stays a maximal signal
    const Path other = extremal_path(od, 3, 0, Extreme::max);
    CHECK_FALSE(vershik_step(od, other, VershikOptions{true}).has_value());
  }
  SUBCASE("bounded mode counts surviving tails") {
    const auto od = random_ordered_diagram(
        *[] { static std::mt19937 rng(7); return &rng; }(), 4, 3, 3);
    const auto r = check_properly_ordered(od, ProperMode::bounded, 4);
    CHECK_FALSE(r.decided);
    CHECK(r.max_tail_counts.size() == 4);
    for (int c : r.max_tail_counts) CHECK(c >= 1);
  }
  SUBCASE("exact mode rejects non-stationary diagrams") {
    BratteliDiagram d;
    d.add_level(1, {Edge{0, 0}});
    d.add_level(1, {Edge{0, 0}, Edge{0, 0}});
    CHECK_THROWS_AS(
        check_properly_ordered(OrderedBratteliDiagram(std::move(d)),
                               ProperMode::exact_stationary),
        Error);
  }
}

TEST_CASE("successor agrees with the sorted brute-force enumeration") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int depth = 2 + trial % 4;  // up to 5
    const auto od = random_ordered_diagram(rng, depth, 4, 4);
    for (int from = 0; from < depth; ++from) {
      for (int to = from + 1; to <= depth; ++to) {
        for (int v = 0; v < od.diagram().level_size(to); ++v) {
          const auto oracle = sorted_paths_oracle(od, from, to, v);
          const auto mine = enumerate_paths(od, from, to, v);
          REQUIRE(mine.size() == oracle.size());
          CHECK(mine == oracle);
          for (std::size_t i = 0; i < oracle.size(); ++i) {
            const auto next = successor_path(od, oracle[i]);
            if (i + 1 < oracle.size()) {
              REQUIRE(next.has_value());
              CHECK(*next == oracle[i + 1]);
            } else {
              CHECK_FALSE(next.has_value());
            }
          }
        }
      }
    }
  }
}

TEST_CASE("vershik iteration from minimal enumerates the tower then signals") {
  std::mt19937 rng(515);
  for (int trial = 0; trial < 25; ++trial) {
    const auto od = random_ordered_diagram(rng, 2 + trial % 3, 3, 3);
    const int top = od.diagram().depth();
    for (int v = 0; v < od.diagram().level_size(top); ++v) {
      const long long height = count_paths_to(od.diagram(), 0, top, v);
      Path p = extremal_path(od, top, v, Extreme::min);
      long long steps = 1;
      while (auto next = vershik_step(od, p)) {
        p = *next;
        ++steps;
      }
      CHECK(steps == height);
      CHECK(p == extremal_path(od, top, v, Extreme::max));
    }
  }
}

TEST_CASE("tower traces") {
  const auto od = diagram_from_substitution(xxy(), 5);
  SUBCASE("trace of the X tower visits X, X, Y in order") {
    for (int level = 2; level <= 5; ++level) {
      const auto trace = tower_trace(od, level, 0, level - 1);
      CHECK(trace_visits(od, trace) == std::vector<int>{0, 0, 1});
    }
  }
  SUBCASE("degenerate trace lists the tower's own floors bottom to top") {
    const auto trace = tower_trace(od, 3, 1, 3);
    const long long h = count_paths_to(od.diagram(), 0, 3, 1);
    REQUIRE(static_cast<long long>(trace.floors.size()) == h);
    for (long long r = 0; r < h; ++r) {
      CHECK(trace.floors[r].vertex == 1);
      CHECK(trace.floors[r].rank == r);
    }
  }
  SUBCASE("trace length equals the enumerate count of the top tower") {
    for (int v = 0; v < 2; ++v) {
      const auto trace = tower_trace(od, 4, v, 2);
      CHECK(static_cast<long long>(trace.floors.size()) ==
            count_paths_to(od.diagram(), 0, 4, v));
    }
  }
  SUBCASE("floors are truncations of the lexicographically ordered top tower") {
    const auto top_paths = enumerate_paths(od, 0, 3, 0);
    const auto trace = tower_trace(od, 3, 0, 2);
    REQUIRE(top_paths.size() == trace.floors.size());
    for (std::size_t i = 0; i < top_paths.size(); ++i) {
      const Path cut = truncate_path(top_paths[i], 2);
      const int w = path_range(od.diagram(), cut);
      CHECK(w == trace.floors[i].vertex);
      // the rank of the truncation within its own tower
      const auto tower = enumerate_paths(od, 0, 2, w);
      const auto it = std::find(tower.begin(), tower.end(), cut);
      REQUIRE(it != tower.end());
      CHECK(static_cast<long long>(it - tower.begin()) == trace.floors[i].rank);
    }
  }
  SUBCASE("simplicity gap makes every tower appear in the trace") {
    const auto simple = check_simple(od.diagram(), 4);
    REQUIRE(simple.status == SimpleStatus::simple_with_gap);
    const int g = simple.gap;
    for (int n = 2; n + g <= 5; ++n) {
      for (int w = 0; w < 2; ++w) {
        const auto visits = trace_visits(od, tower_trace(od, n + g, w, n));
        for (int v = 0; v < 2; ++v)
          CHECK(std::count(visits.begin(), visits.end(), v) >= 1);
      }
    }
  }
}

TEST_CASE("trace runs decompose into complete towers on random diagrams") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto od = random_ordered_diagram(rng, 4, 3, 3);
    for (int v = 0; v < od.diagram().level_size(4); ++v) {
      for (int base = 1; base < 4; ++base) {
        const auto trace = tower_trace(od, 4, v, base);
        CHECK_NOTHROW(trace_visits(od, trace));  // throws if runs are broken
      }
    }
  }
}

TEST_CASE("telescoped diagrams keep the lexicographic order") {
  const auto od = diagram_from_substitution(xxy(), 6);
  const auto tel = telescope(od, {0, 2, 4, 6});
  // edges into each telescoped vertex are the sorted paths, so rank i maps to
  // the i-th path
  for (int v = 0; v < 2; ++v) {
    const auto paths = enumerate_paths(od, 2, 4, v);
    const auto& inc = tel.diagram.incoming_ordered(2, v);
    REQUIRE(paths.size() == inc.size());
    for (std::size_t i = 0; i < inc.size(); ++i)
      CHECK(tel.edge_paths[2][inc[i]] == paths[i]);
  }
}
