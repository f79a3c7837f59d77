// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria A1-A3 drive the installed CLI binary; the rest use the library.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adic/commands.hpp"
#include "adic/emit.hpp"
#include "adic/tripling.hpp"
#include "../tests/test_util.hpp"

using namespace adic;

namespace {

std::string g_cli = "./adic";
const std::string g_fixtures = ADIC_FIXTURE_DIR;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe))
    result.out.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string current;
  while (std::getline(in, current))
    if (current == line) return true;
  return false;
}

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
  if (!detail.empty()) std::cout << "  -- " << detail;
  std::cout << "\n";
  if (!ok) ++g_failures;
}

Substitution xxy() { return Substitution({"X", "Y"}, {{0, 0, 1}, {0, 1, 1}}); }

StationaryLabelling xxy_z2_stationary() {
  StationaryLabelling st;
  st.group = FiniteGroup::cyclic(2);
  st.values = {{0, 0, 0}, {0, 1, 0}};
  return st;
}

OrderedBratteliDiagram odometer(int depth) {
  auto od = diagram_from_substitution(Substitution({"a"}, {{0, 0}}), 2);
  od.extend_to(depth);
  return od;
}

Labelling odometer_labelling(const BratteliDiagram& d, const FiniteGroup& g,
                             int lo, int hi) {
  Labelling lab(g);
  lab.set_level_values(1, {g.identity()});
  for (int n = 2; n <= d.depth(); ++n) lab.set_level_values(n, {lo, hi});
  return lab;
}

// ---- criteria -------------------------------------------------------------

void criterion_1() {
  const std::string spec = g_fixtures + "/xxy.bspec";
  const CliResult skew = run_cli("skew " + spec);
  bool ok = skew.exit_code == 0;
  for (const char* line : {"X_0 -> X_0 X_0 Y_0", "X_1 -> X_1 X_1 Y_1",
                           "Y_0 -> X_0 Y_1 Y_0", "Y_1 -> X_1 Y_0 Y_1"})
    ok = ok && has_line(skew.out, line);
  const CliResult simple = run_cli("simple " + spec);
  ok = ok && simple.exit_code == 0 &&
       simple.out.find("gap 3") != std::string::npos;
  report("A1 skew table and simplicity gap 3", ok);
}

void criterion_2() {
  const CliResult triple = run_cli("triple " + g_fixtures + "/xxy_plain.bspec");
  bool ok = triple.exit_code == 0 &&
            triple.out.find("over 6 letters") != std::string::npos;
  for (const char* line :
       {"[X,X,Y] -> [Y,X,X] [X,X,Y] [X,Y,X]", "[Y,X,X] -> [Y,X,X] [X,X,Y] [X,Y,X]",
        "[X,Y,X] -> [Y,X,Y] [X,Y,Y] [Y,Y,X]", "[X,Y,Y] -> [Y,X,Y] [X,Y,Y] [Y,Y,X]",
        "[Y,X,Y] -> [Y,X,X] [X,X,Y] [X,Y,X]", "[Y,Y,X] -> [Y,X,Y] [X,Y,Y] [Y,Y,X]"})
    ok = ok && has_line(triple.out, line);
  report("A2 tripled substitution: six letters with the exact image lines", ok);
}

void criterion_3() {
  const std::string spec = g_fixtures + "/xxy.bspec";
  const CliResult triple = run_cli("triple " + spec);
  bool ok = triple.exit_code == 0 &&
            triple.out.find("over 20 letters") != std::string::npos;
  // under x = X_0, x' = X_1, y = Y_0, y' = Y_1; the image of [x,y,x'] ends
  // with [y',y,x'] by the last-letter rule (its printed source drops the
  // prime, contradicting the general rule, so the corrected line is checked)
  for (const char* line :
       {"[X_0,X_0,Y_0] -> [Y_0,X_0,X_0] [X_0,X_0,Y_0] [X_0,Y_0,X_0]",
        "[X_0,Y_0,X_0] -> [Y_0,X_0,Y_1] [X_0,Y_1,Y_0] [Y_1,Y_0,X_0]",
        "[X_0,Y_0,X_1] -> [Y_0,X_0,Y_1] [X_0,Y_1,Y_0] [Y_1,Y_0,X_1]",
        "[Y_0,X_0,X_0] -> [Y_0,X_0,X_0] [X_0,X_0,Y_0] [X_0,Y_0,X_0]",
        "[Y_1,X_0,X_0] -> [Y_1,X_0,X_0] [X_0,X_0,Y_0] [X_0,Y_0,X_0]"})
    ok = ok && has_line(triple.out, line);
  const CliResult quotient = run_cli("quotient " + spec);
  ok = ok && quotient.exit_code == 0 &&
       quotient.out.find("10 orbits") != std::string::npos;
  report("A3 tripled skew system: twenty letters, image lines, ten orbits", ok);
}

FiniteGroup quaternion_group() {
  // elements: sign s in {+,-} and axis a in {1,i,j,k}, index = a*2 + (s<0)
  const auto mul = [](int x, int y) {
    const int ax = x / 2, sx = x % 2, ay = y / 2, sy = y % 2;
    static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2},
                                   {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1},
                                   {0, 1, 1, 0}, {0, 0, 1, 1}};
    return axis[ax][ay] * 2 + ((sx + sy + sign[ax][ay]) % 2);
  };
  std::vector<int> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) table[x * 8 + y] = mul(x, y);
  return FiniteGroup::from_table(
      8, std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

std::vector<FiniteGroup> groups_up_to_order_8() {
  std::vector<FiniteGroup> out;
  for (int n = 1; n <= 8; ++n) out.push_back(FiniteGroup::cyclic(n));
  const auto z2 = FiniteGroup::cyclic(2);
  out.push_back(FiniteGroup::direct_product(z2, z2));
  out.push_back(FiniteGroup::direct_product(z2, FiniteGroup::cyclic(4)));
  out.push_back(
      FiniteGroup::direct_product(z2, FiniteGroup::direct_product(z2, z2)));
  out.push_back(FiniteGroup::symmetric(3));
  {
    // dihedral of order 8: rotations acted on by inversion
    std::vector<std::vector<int>> action = {{0, 1, 2, 3}, {0, 3, 2, 1}};
    out.push_back(
        FiniteGroup::semidirect_product(FiniteGroup::cyclic(4), z2, action));
  }
  out.push_back(quaternion_group());
  return out;
}

void criterion_4() {
  bool ok_a = true;
  {
    std::mt19937 rng(20260809);
    const std::array<FiniteGroup, 4> groups = {
        FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
        FiniteGroup::symmetric(3)};
    int done = 0;
    while (done < 50) {
      const auto od = testutil::random_ordered_diagram(rng, 6, 3, 1);
      // keep the towers small enough for the depth-6 scan
      long long widest = 0;
      for (int v = 0; v < od.diagram().level_size(6); ++v)
        widest = std::max(widest, count_paths_to(od.diagram(), 0, 6, v));
      if (widest > 1200) continue;
      const FiniteGroup& g = groups[done % groups.size()];
      std::vector<std::vector<int>> beta(7);
      std::uniform_int_distribution<int> pick(0, g.order() - 1);
      for (int n = 0; n <= 6; ++n) {
        beta[n].resize(od.diagram().level_size(n));
        for (auto& b : beta[n]) b = pick(rng);
      }
      beta[0][0] = g.identity();
      const auto lab = coboundary_labelling(od.diagram(), g, beta);
      ok_a = ok_a && check_loops_lift(od, lab, 6).holds;
      ++done;
    }
  }

  bool ok_b = true;
  {
    const auto base = diagram_from_substitution(xxy(), 6);
    ok_b = ok_b &&
           check_loops_lift(base, Labelling::trivial(FiniteGroup::cyclic(4),
                                                     base.diagram()),
                            6)
               .holds;
    const auto om = odometer(6);
    ok_b = ok_b &&
           check_loops_lift(
               om, Labelling::trivial(FiniteGroup::symmetric(3), om.diagram()), 6)
               .holds;
  }

  bool ok_c = true;
  long long pairs = 0;
  {
    const auto om = odometer(4);
    for (const auto& g : groups_up_to_order_8()) {
      for (int s = 0; s < g.order(); ++s) {
        for (int t = 0; t < g.order(); ++t) {
          const auto lab = odometer_labelling(om.diagram(), g, s, t);
          const bool verdict = check_loops_lift(om, lab, 4).holds;
          if (verdict != check_odometer_relation(g, s, t)) ok_c = false;
          ++pairs;
        }
      }
    }
    const auto s3 = FiniteGroup::symmetric(3);
    const auto lab = odometer_labelling(om.diagram(), s3, s3.element("(12)"),
                                        s3.element("(123)"));
    const auto r = check_loops_lift(om, lab, 4);
    ok_c = ok_c && !r.holds && r.witness.has_value();
  }

  report("A4 loops checker calibration",
         ok_a && ok_b && ok_c,
         "coboundary x50: " + std::string(ok_a ? "ok" : "FAIL") +
             ", trivial: " + (ok_b ? "ok" : "FAIL") + ", odometer scan (" +
             std::to_string(pairs) + " pairs, 14 groups): " +
             (ok_c ? "ok" : "FAIL"));
}

void criterion_5() {
  struct Case {
    std::string name;
    OrderedBratteliDiagram base;
    Labelling lambda;
    bool pi_should_lift_loops;
  };
  std::vector<Case> cases;
  {
    const auto base = diagram_from_substitution(xxy(), 4);
    cases.push_back({"two-letter cyclic", base,
                     stationary_edge_labelling(xxy(), xxy_z2_stationary(),
                                               base.diagram()),
                     false});
    cases.push_back({"trivial", base,
                     Labelling::trivial(FiniteGroup::cyclic(2), base.diagram()),
                     true});
    std::vector<std::vector<int>> beta(5);
    beta[0] = {0};
    for (int n = 1; n <= 4; ++n) beta[n] = {0, 1};
    cases.push_back(
        {"coboundary", base,
         coboundary_labelling(base.diagram(), FiniteGroup::cyclic(2), beta),
         true});
  }
  {
    const auto s3 = FiniteGroup::symmetric(3);
    const auto base = odometer(4);
    cases.push_back({"odometer in S3", base,
                     odometer_labelling(base.diagram(), s3, s3.element("(12)"),
                                        s3.element("(123)")),
                     false});
  }
  bool all_ok = true;
  std::string detail;
  for (auto& c : cases) {
    const auto sq = build_commuting_square(c.base, c.lambda, 4);
    bool case_ok = sq.all_ok();
    const bool pi_loops = check_loops_lift(c.base, c.lambda, 4).holds;
    case_ok = case_ok && pi_loops == c.pi_should_lift_loops;
    if (!case_ok) {
      for (const auto& clause : sq.clauses)
        if (!clause.ok) detail += c.name + ":" + clause.clause + " ";
      if (pi_loops != c.pi_should_lift_loops) detail += c.name + ":pi-loops ";
    }
    all_ok = all_ok && case_ok;
  }
  report("A5 commuting square verified on the four corpus labellings", all_ok,
         detail.empty() ? "phi, mu, equivariance, lifting, loops at depth 4"
                        : detail);
}

void criterion_6() {
  std::mt19937 rng(424242);
  bool ok = true;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    const int depth = 2 + trial % 4;
    const auto od = testutil::random_ordered_diagram(rng, depth, 4, 4);
    for (int from = 0; from < depth && ok; ++from) {
      for (int v = 0; v < od.diagram().level_size(depth) && ok; ++v) {
        const auto oracle = testutil::sorted_paths_oracle(od, from, depth, v);
        const auto mine = enumerate_paths(od, from, depth, v);
        ok = ok && mine == oracle;
        for (std::size_t i = 0; i + 1 < oracle.size() && ok; ++i) {
          const auto next = successor_path(od, oracle[i]);
          ok = ok && next.has_value() && *next == oracle[i + 1];
        }
        if (!oracle.empty())
          ok = ok && !successor_path(od, oracle.back()).has_value();
      }
    }
    // vershik iteration from the minimal path visits every floor then stops
    const int v0 = 0;
    const long long height = count_paths_to(od.diagram(), 0, depth, v0);
    Path p = extremal_path(od, depth, v0, Extreme::min);
    long long steps = 1;
    while (auto next = vershik_step(od, p)) {
      p = *next;
      ++steps;
    }
    ok = ok && steps == height;
  }
  report("A6 successor agrees with the brute-force order on 200 random diagrams",
         ok);
}

void criterion_7() {
  const auto base = diagram_from_substitution(xxy(), 4);
  const auto lab =
      stationary_edge_labelling(xxy(), xxy_z2_stationary(), base.diagram());
  const auto skew = skew_product(base, lab);
  const auto tripled = triple_diagram(skew.total, 4);
  const auto triple_sub = triple_substitution(
      skew_substitution(xxy(), xxy_z2_stationary()));
  const auto expected = diagram_from_substitution(triple_sub.sub, 4);
  bool ok = tripled.total.diagram().level_size(1) ==
            triple_sub.sub.alphabet_size();
  if (ok) {
    std::vector<std::vector<int>> bij(5);
    bij[0] = {0};
    for (int n = 1; n <= 4; ++n) {
      bij[n].resize(triple_sub.sub.alphabet_size());
      for (int a = 0; a < triple_sub.sub.alphabet_size(); ++a)
        bij[n][tripled.triple_index(n, triple_sub.triples[a])] = a;
    }
    ok = check_level_isomorphism(tripled.total, expected, bij, 4);
  }
  report("A7 diagram route and substitution route agree up to depth 4", ok);
}

void criterion_8() {
  // cyclic pair: fixed point letters paired with alternating generator powers
  const auto a = fixed_point_window(xxy(), 0, 2000);
  std::vector<int> paired(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    paired[i] = a[i] * 2 + static_cast<int>(i % 2);
  // the pairing is the fixed point of the skewed system itself
  StationaryLabelling powers;
  powers.group = FiniteGroup::cyclic(2);
  powers.values = {{1, 0, 1}, {1, 0, 1}};
  const auto skew = skew_substitution(xxy(), powers);
  const bool pairing_consistent =
      fixed_point_window(skew, 0, 2000) == paired;

  const auto cyclic_report = toeplitz_window_check(paired, 81);
  int first_failing = -1;
  for (std::size_t m = 0; m < cyclic_report.least_period.size(); ++m)
    if (cyclic_report.least_period[m] < 0) {
      first_failing = static_cast<int>(m);
      break;
    }
  const bool cyclic_ok = pairing_consistent && cyclic_report.all_periodic;
  // diagnose the failing position on the letter coordinate alone
  int letter_period = -2;
  if (first_failing >= 0) {
    const auto letters_only = toeplitz_window_check(a, 2000 / 2);
    letter_period = letters_only.least_period[first_failing];
  }

  // non-cyclic pair: the permutation-indexed sequence must have a failing
  // position in the same window
  const auto s3 = FiniteGroup::symmetric(3);
  StationaryLabelling st;
  st.group = s3;
  st.values = {{s3.element("(123)"), s3.element("(12)")}};
  const auto s3_skew = skew_substitution(Substitution({"a"}, {{0, 0}}), st);
  const auto s3_window = fixed_point_window(s3_skew, 0, 2000);
  const auto s3_report = toeplitz_window_check(s3_window, 81);
  const bool s3_ok = !s3_report.all_periodic;

  std::string detail;
  if (!cyclic_ok)
    detail += "cyclic clause: position " + std::to_string(first_failing) +
              " of the paired window has no period <= 81; its letter "
              "coordinate has least period " + std::to_string(letter_period) +
              " and the alternating coordinate forces an even period, so the "
              "least admissible paired period is " +
              std::to_string(2 * letter_period) + "; ";
  detail += std::string("non-cyclic clause: ") + (s3_ok ? "ok" : "FAIL");
  report("A8 toeplitz windows at bound 81 over 2000 positions",
         cyclic_ok && s3_ok, detail);
}

void criterion_9() {
  bool ok = true;
  std::string detail;
  {
    const auto base = diagram_from_substitution(xxy(), 4);
    const auto lab =
        stationary_edge_labelling(xxy(), xxy_z2_stationary(), base.diagram());
    const auto sq = build_commuting_square(base, lab, 4);
    const auto& g = lab.group();
    for (int level = 1; level <= 4 && ok; ++level) {
      // cocycle_from_square verifies representative independence internally
      const auto c = cocycle_from_square(sq, level);
      for (std::size_t q = 0; q < c.bottom_value.size() && ok; ++q)
        for (long long floor = 1; floor < 4; ++floor)
          ok = ok &&
               cocycle_value(c, static_cast<int>(q), floor, g) == g.identity();
    }
    if (!ok) detail = "off-bottom floors not identity";
  }
  if (ok) {
    const auto base = diagram_from_substitution(xxy(), 4);
    const auto trivial = Labelling::trivial(FiniteGroup::cyclic(2), base.diagram());
    const auto sq = build_commuting_square(base, trivial, 4);
    for (int level = 1; level <= 4 && ok; ++level) {
      const auto c = cocycle_from_square(sq, level);
      for (int v : c.bottom_value) ok = ok && v == trivial.group().identity();
    }
    if (!ok) detail = "trivial labelling has a nontrivial cocycle";
  }
  report("A9 quotient cocycle: bottom-only, representative independent, "
         "trivial for trivial labellings",
         ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
    if (std::string(argv[i]) == "--only") only = argv[i + 1];
  }

  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"A1", criterion_1}, {"A2", criterion_2}, {"A3", criterion_3},
      {"A4", criterion_4}, {"A5", criterion_5}, {"A6", criterion_6},
      {"A7", criterion_7}, {"A8", criterion_8}, {"A9", criterion_9}};
  for (const auto& [name, fn] : criteria)
    if (only.empty() || only == name) fn();

  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " acceptance criteria failed\n";
  return 1;
}
