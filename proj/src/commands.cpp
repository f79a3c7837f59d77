#include "adic/commands.hpp"

#include <algorithm>
#include <sstream>

#include "adic/emit.hpp"
#include "adic/tripling.hpp"

namespace adic {

const char* const kToolVersion = "0.1.0";

using nlohmann::json;

std::string RunReport::json_string() const {
  json j;
  j["command"] = command;
  j["version"] = kToolVersion;
  j["report"] = body;
  j["exit"] = exit_code;
  return j.dump(2) + "\n";
}

namespace {

struct Context {
  const SpecDocument& doc;
  BuiltSystem sys;
  int depth;
  std::ostringstream text;
  json body;
  bool depth_from_option = false;
};

// The labelled system (the skew product) is the analysis target of the
// dynamical commands when labels are declared; otherwise the base diagram is.
struct AnalysisTarget {
  OrderedBratteliDiagram diagram;
  std::vector<std::vector<std::string>> names;
  std::string which;  // "base" or "skew"
};

AnalysisTarget analysis_target(Context& ctx) {
  AnalysisTarget t;
  if (ctx.sys.lambda && ctx.doc.labelled()) {
    const SkewProduct skew = skew_product(ctx.sys.base, *ctx.sys.lambda);
    t.diagram = skew.total;
    t.which = "skew";
    t.names.push_back({"*"});
    for (int n = 1; n <= t.diagram.diagram().depth(); ++n)
      t.names.push_back(skew_names(ctx.sys.vertex_names[n], ctx.sys.lambda->group()));
  } else {
    t.diagram = ctx.sys.base;
    t.names = ctx.sys.vertex_names;
    t.which = "base";
  }
  return t;
}

std::string path_to_string(const Path& p) {
  std::ostringstream out;
  out << "level" << p.start_level << ":";
  for (std::size_t i = 0; i < p.edges.size(); ++i)
    out << (i ? "," : "") << p.edges[i];
  return out.str();
}

json path_to_json(const Path& p) {
  json j;
  j["start_level"] = p.start_level;
  j["edges"] = p.edges;
  return j;
}

void cmd_validate(Context& ctx, RunReport& report) {
  const auto violations = validate(ctx.sys.base.diagram());
  json list = json::array();
  for (const auto& v : violations) {
    json jv;
    jv["level"] = v.level;
    jv["index"] = v.index;
    jv["message"] = v.message;
    list.push_back(jv);
    ctx.text << "violation level " << v.level << " vertex " << v.index << ": "
             << v.message << "\n";
  }
  ctx.body["violations"] = list;
  ctx.body["valid"] = violations.empty();
  if (violations.empty()) ctx.text << "valid\n";
  else report.exit_code = 1;
  // towers whose minimum height stalls cannot support the path dynamics;
  // report the growth so stalls are visible
  const BratteliDiagram& d = ctx.sys.base.diagram();
  json growth = json::array();
  long long prev = 0;
  bool stalled = false;
  for (int n = 1; n <= d.depth(); ++n) {
    const auto heights = tower_heights(d, n);
    const long long low = *std::min_element(heights.begin(), heights.end());
    growth.push_back(low);
    if (n == d.depth() && low <= prev) stalled = true;
    prev = low;
  }
  ctx.body["min_tower_heights"] = growth;
  if (stalled)
    ctx.sys.warnings.push_back(
        "minimum tower height is not growing at the last materialized level");
}

void cmd_simple(Context& ctx, RunReport& report) {
  AnalysisTarget target = analysis_target(ctx);
  const SimpleReport r = check_simple(target.diagram.diagram(), ctx.depth);
  ctx.body["target"] = target.which;
  ctx.body["exact"] = r.exact;
  switch (r.status) {
    case SimpleStatus::simple_with_gap:
      ctx.body["status"] = "simple-with-gap";
      ctx.body["gap"] = r.gap;
      ctx.text << "simple with gap " << r.gap << (r.exact ? " (exact)" : " (to depth)")
               << "\n";
      break;
    case SimpleStatus::not_established:
      ctx.body["status"] = "not-established-within-bound";
      ctx.text << "not established within gap bound " << ctx.depth << "\n";
      report.exit_code = 1;
      break;
    case SimpleStatus::refuted_stationary:
      ctx.body["status"] = "refuted-for-stationary";
      ctx.text << "refuted: repeating incidence matrix is not primitive\n";
      report.exit_code = 1;
      break;
  }
}

void cmd_vershik(Context& ctx, const CommandOptions& opt) {
  AnalysisTarget target = analysis_target(ctx);
  const int level = opt.level.value_or(ctx.depth);
  if (!opt.vertex) throw Error("usage", "vershik needs --vertex");
  const int vertex = *opt.vertex;
  target.diagram.extend_to(level);
  Path p = extremal_path(target.diagram, level, vertex, Extreme::min);
  json floors = json::array();
  long long count = 0;
  while (true) {
    floors.push_back(path_to_json(p));
    ctx.text << count << ": " << path_to_string(p) << "\n";
    ++count;
    auto next = vershik_step(target.diagram, p);
    if (!next) break;
    p = std::move(*next);
  }
  ctx.text << "maximal after " << count << " floors\n";
  ctx.body["target"] = target.which;
  ctx.body["level"] = level;
  ctx.body["vertex"] = vertex;
  ctx.body["height"] = count;
  ctx.body["floors"] = floors;
}

void cmd_trace(Context& ctx, const CommandOptions& opt) {
  AnalysisTarget target = analysis_target(ctx);
  const int level = opt.level.value_or(ctx.depth);
  const int base_level = opt.base_level.value_or(std::max(1, level - 1));
  if (!opt.vertex) throw Error("usage", "trace needs --vertex");
  target.diagram.extend_to(level);
  const TowerTrace trace = tower_trace(target.diagram, level, *opt.vertex, base_level);
  const auto visits = trace_visits(target.diagram, trace);
  json jfloors = json::array();
  for (const auto& f : trace.floors) {
    json jf;
    jf["vertex"] = f.vertex;
    jf["rank"] = f.rank;
    jfloors.push_back(jf);
  }
  ctx.body["floors"] = jfloors;
  ctx.body["visits"] = visits;
  ctx.body["length"] = trace.floors.size();
  ctx.text << "trace of vertex " << *opt.vertex << " at level " << level
           << " over level " << base_level << ": " << trace.floors.size()
           << " floors\nvisits:";
  for (int v : visits) {
    ctx.text << " "
             << (v < static_cast<int>(target.names[base_level].size())
                     ? target.names[base_level][v]
                     : std::to_string(v));
  }
  ctx.text << "\n";
}

void print_substitution(Context& ctx, const Substitution& s, const char* title) {
  ctx.text << title << " over " << s.alphabet_size() << " letters\n";
  json lines = json::array();
  for (int a = 0; a < s.alphabet_size(); ++a) {
    std::ostringstream line;
    line << s.letter_name(a) << " ->";
    for (int x : s.image(a)) line << " " << s.letter_name(x);
    ctx.text << line.str() << "\n";
    lines.push_back(line.str());
  }
  ctx.body["alphabet_size"] = s.alphabet_size();
  ctx.body["lines"] = lines;
}

void cmd_skew(Context& ctx) {
  if (!ctx.sys.lambda) throw Error("usage", "skew needs a labelled system");
  if (ctx.sys.substitution && ctx.sys.stationary_labelling) {
    const Substitution skew =
        skew_substitution(*ctx.sys.substitution, *ctx.sys.stationary_labelling);
    print_substitution(ctx, skew, "skew substitution");
    return;
  }
  const SkewProduct skew = skew_product(ctx.sys.base, *ctx.sys.lambda);
  ctx.body["levels"] = skew.total.diagram().depth();
  ctx.body["vertices_per_level"] = skew.total.diagram().level_size(1);
  ctx.text << "skew diagram with " << skew.total.diagram().level_size(1)
           << " vertices per level\n";
}

// the tripled system: the skew substitution when labels are present
const Substitution tripling_input(Context& ctx) {
  if (!ctx.sys.substitution)
    throw Error("usage", "triple/quotient need a substitution system");
  if (ctx.sys.stationary_labelling && ctx.doc.labelled())
    return skew_substitution(*ctx.sys.substitution, *ctx.sys.stationary_labelling);
  return *ctx.sys.substitution;
}

void cmd_triple(Context& ctx) {
  const Substitution input = tripling_input(ctx);
  const TripleSubstitution t = triple_substitution(input);
  ctx.body["triple_count"] = t.sub.alphabet_size();
  print_substitution(ctx, t.sub, "triple substitution");
}

void cmd_quotient(Context& ctx) {
  if (!ctx.sys.substitution || !ctx.sys.stationary_labelling || !ctx.doc.labelled())
    throw Error("usage", "quotient needs a labelled substitution system");
  const FiniteGroup& g = ctx.sys.lambda->group();
  const CommutingSquare sq =
      build_commuting_square(ctx.sys.base, *ctx.sys.lambda, std::max(ctx.depth, 2));
  const auto& qd = sq.quotient.quotient;
  const int orbits = qd.diagram().level_size(1);
  ctx.body["orbit_count"] = orbits;
  ctx.body["group_order"] = g.order();
  ctx.text << "quotient alphabet: " << orbits << " orbits\n";
  // present the quotient's repeating block as a substitution over orbit names
  std::vector<std::string> skew_letter_names =
      skew_names(ctx.sys.vertex_names[1], g);
  json lines = json::array();
  const int block = qd.diagram().depth();
  std::vector<std::string> orbit_names(orbits);
  for (int q = 0; q < orbits; ++q) {
    const int rep = sq.quotient.representative[block][q];
    const auto& t = sq.tripled.triples[block][rep];
    orbit_names[q] = "<[" + skew_letter_names[t[0]] + "," + skew_letter_names[t[1]] +
                     "," + skew_letter_names[t[2]] + "]>";
  }
  for (int q = 0; q < orbits; ++q) {
    std::ostringstream line;
    line << orbit_names[q] << " ->";
    for (int e : qd.incoming_ordered(block, q))
      line << " " << orbit_names[qd.diagram().edge(block, e).source];
    ctx.text << line.str() << "\n";
    lines.push_back(line.str());
  }
  ctx.body["lines"] = lines;
}

void cmd_square(Context& ctx, RunReport& report) {
  if (!ctx.sys.lambda) throw Error("usage", "square needs a labelled system");
  const CommutingSquare sq =
      build_commuting_square(ctx.sys.base, *ctx.sys.lambda, std::max(ctx.depth, 2));
  json clauses = json::array();
  for (const auto& c : sq.clauses) {
    json jc;
    jc["clause"] = c.clause;
    jc["status"] = c.ok ? "verified" : "failed";
    jc["depth"] = sq.depth;
    if (!c.detail.empty()) jc["witness"] = c.detail;
    clauses.push_back(jc);
    ctx.text << (c.ok ? "ok   " : "FAIL ") << c.clause
             << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  }
  ctx.body["clauses"] = clauses;
  ctx.body["quotient_vertices_per_level"] =
      sq.quotient.quotient.diagram().level_size(1);
  ctx.body["all_verified"] = sq.all_ok();
  ctx.text << "quotient vertices per level: "
           << sq.quotient.quotient.diagram().level_size(1) << "\n";
  if (!sq.all_ok()) report.exit_code = 1;
}

void cmd_loops(Context& ctx, RunReport& report) {
  if (!ctx.sys.lambda) throw Error("usage", "loops needs a labelled system");
  int depth = ctx.depth;
  bool default_depth = false;
  if (ctx.sys.base.diagram().stationary() && !ctx.doc.default_depth_explicit &&
      !ctx.depth_from_option) {
    // stationary labellings get the pigeonhole-motivated default depth
    depth = default_loops_depth(ctx.sys.base, ctx.sys.lambda->group());
    default_depth = true;
  }
  if (!ctx.sys.base.diagram().stationary())
    depth = std::min(depth, ctx.sys.base.diagram().depth());
  ctx.sys.base.extend_to(depth);
  Labelling lam = *ctx.sys.lambda;
  if (lam.depth() < depth) lam.extend_to(ctx.sys.base.diagram(), depth);
  const LoopsReport r = check_loops_lift(ctx.sys.base, lam, depth);
  ctx.body["depth"] = depth;
  ctx.body["default_depth_used"] = default_depth;
  if (r.holds) {
    ctx.body["verdict"] = "holds-to-depth";
    ctx.text << "loops lift to loops: holds to depth " << depth << "\n";
  } else {
    const LoopsWitness& w = *r.witness;
    ctx.body["verdict"] = "fails";
    json jw;
    jw["k"] = w.k;
    jw["m"] = w.m;
    jw["n"] = w.n;
    jw["alpha"] = path_to_json(w.alpha);
    jw["beta"] = path_to_json(w.beta);
    jw["gamma"] = path_to_json(w.gamma);
    jw["delta"] = path_to_json(w.delta);
    jw["g"] = w.g;
    jw["h"] = w.h;
    jw["src_alpha"] = w.src_alpha;
    jw["src_beta"] = w.src_beta;
    jw["src_gamma"] = w.src_gamma;
    jw["src_delta"] = w.src_delta;
    ctx.body["witness"] = jw;
    ctx.text << "loops lift to loops: fails\n"
             << "witness k=" << w.k << " m=" << w.m << " n=" << w.n << "\n"
             << "  alpha " << path_to_string(w.alpha) << "\n"
             << "  beta  " << path_to_string(w.beta) << "\n"
             << "  gamma " << path_to_string(w.gamma) << "\n"
             << "  delta " << path_to_string(w.delta) << "\n"
             << "  upstairs sources: alpha=" << w.src_alpha
             << " beta=" << w.src_beta << " gamma=" << w.src_gamma
             << " delta=" << w.src_delta << " (g=" << w.g << ", h=" << w.h << ")\n";
    report.exit_code = 1;
  }
}

void cmd_cohomology(Context& ctx, RunReport& report) {
  if (!ctx.sys.lambda) throw Error("usage", "cohomology needs a labelled system");
  Labelling lam = *ctx.sys.lambda;
  Labelling mu = ctx.sys.mu ? *ctx.sys.mu
                            : Labelling::trivial(lam.group(), ctx.sys.base.diagram());
  const auto beta = find_cohomology(ctx.sys.base.diagram(), lam, mu, ctx.depth);
  ctx.body["depth"] = ctx.depth;
  ctx.body["against"] = ctx.sys.mu ? "second labelling" : "trivial labelling";
  if (beta) {
    ctx.body["verdict"] = "cohomologous";
    json jb = json::array();
    for (const auto& level : *beta) jb.push_back(level);
    ctx.body["beta"] = jb;
    ctx.text << "cohomologous: witness found\n";
  } else {
    ctx.body["verdict"] = "not-found-within-bound";
    ctx.text << "not cohomologous within depth " << ctx.depth << "\n";
    report.exit_code = 1;
  }
}

void cmd_toeplitz(Context& ctx, const CommandOptions& opt, RunReport& report) {
  if (!ctx.sys.substitution) throw Error("usage", "toeplitz needs a substitution");
  const int window = opt.window.value_or(ctx.doc.default_window);
  const int bound = opt.period_bound.value_or(ctx.doc.default_period_bound);
  Substitution target = ctx.sys.substitution.value();
  if (ctx.sys.stationary_labelling && ctx.doc.labelled())
    target = skew_substitution(*ctx.sys.substitution, *ctx.sys.stationary_labelling);
  int seed = 0;
  if (opt.seed) {
    seed = target.letter(*opt.seed);
  } else if (ctx.doc.seed_letter) {
    // the declared seed names a base letter; pair it with the identity
    seed = ctx.sys.stationary_labelling && ctx.doc.labelled()
               ? *ctx.doc.seed_letter * ctx.sys.lambda->group().order() +
                     ctx.sys.lambda->group().identity()
               : *ctx.doc.seed_letter;
  }
  const auto sequence = fixed_point_window(target, seed, window);
  const ToeplitzReport r = toeplitz_window_check(sequence, bound);
  int failing = -1;
  int worst = 0;
  for (int m = 0; m < static_cast<int>(r.least_period.size()); ++m) {
    if (r.least_period[m] < 0 && failing < 0) failing = m;
    worst = std::max(worst, r.least_period[m]);
  }
  ctx.body["window"] = window;
  ctx.body["period_bound"] = bound;
  ctx.body["all_periodic"] = r.all_periodic;
  ctx.body["max_least_period"] = worst;
  if (r.global_period) {
    ctx.body["global_period"] = *r.global_period;
    ctx.text << "window is globally " << *r.global_period
             << "-periodic, hence not a Toeplitz witness\n";
  }
  if (r.all_periodic) {
    ctx.text << "every position periodic within bound " << bound
             << " (max least period " << worst << ")\n";
  } else {
    ctx.body["first_failing_position"] = failing;
    ctx.text << "position " << failing << " has no period within bound " << bound
             << "\n";
    report.exit_code = 1;
  }
}

void cmd_emit(Context& ctx, bool dot) {
  AnalysisTarget target{ctx.sys.base, ctx.sys.vertex_names, "base"};
  const Labelling* labels = ctx.sys.lambda ? &*ctx.sys.lambda : nullptr;
  if (dot) {
    ctx.text << diagram_to_dot(target.diagram, target.names, labels);
    ctx.body["format"] = "dot";
  } else {
    ctx.body = diagram_to_json(target.diagram, target.names, labels);
    ctx.text << ctx.body.dump(2) << "\n";
  }
}

}  // namespace

RunReport run_command(const SpecDocument& doc, const std::string& spec_text,
                      const std::string& command, const CommandOptions& options) {
  RunReport report;
  report.command = command;
  Context ctx{doc, BuiltSystem{}, 0, {}, json::object()};
  ctx.depth = options.depth.value_or(doc.default_depth);
  ctx.depth_from_option = options.depth.has_value();
  // the emitters treat --level as the depth to materialize
  if ((command == "emit-dot" || command == "emit-json") && options.level &&
      !options.depth) {
    ctx.depth = *options.level;
    ctx.depth_from_option = true;
  }
  if (ctx.depth < 1) throw Error("usage", "depth must be at least 1");
  ctx.sys = build_system(doc, std::max(ctx.depth, 2));

  if (command == "validate") cmd_validate(ctx, report);
  else if (command == "simple") cmd_simple(ctx, report);
  else if (command == "vershik") cmd_vershik(ctx, options);
  else if (command == "trace") cmd_trace(ctx, options);
  else if (command == "skew") cmd_skew(ctx);
  else if (command == "triple") cmd_triple(ctx);
  else if (command == "quotient") cmd_quotient(ctx);
  else if (command == "square") cmd_square(ctx, report);
  else if (command == "loops") cmd_loops(ctx, report);
  else if (command == "cohomology") cmd_cohomology(ctx, report);
  else if (command == "toeplitz") cmd_toeplitz(ctx, options, report);
  else if (command == "emit-dot") cmd_emit(ctx, true);
  else if (command == "emit-json") cmd_emit(ctx, false);
  else throw Error("usage", "unknown command '" + command + "'");

  for (const auto& w : ctx.sys.warnings) ctx.body["warnings"].push_back(w);
  ctx.body["digest"] = text_digest(spec_text);
  report.body = std::move(ctx.body);
  report.text = ctx.text.str();
  return report;
}

}  // namespace adic
