#include "adic/spec_format.hpp"

#include <algorithm>
#include <sstream>

namespace adic {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

[[noreturn]] void fail(int line_no, const std::string& message) {
  throw Error("parse", "line " + std::to_string(line_no) + ": " + message);
}

int parse_int(const std::string& tok, int line_no, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    fail(line_no, "expected an integer for " + what + ", got '" + tok + "'");
  }
}

// group element by name or index
int parse_element(const FiniteGroup& g, const std::string& tok, int line_no) {
  try {
    return g.element(tok);
  } catch (const Error&) {
  }
  const int idx = parse_int(tok, line_no, "group element");
  if (idx < 0 || idx >= g.order()) fail(line_no, "group element out of range");
  return idx;
}

}  // namespace

SpecDocument parse_spec(const std::string& text) {
  SpecDocument doc;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  struct PendingSub {
    std::vector<std::string> alphabet;
    std::vector<std::pair<std::string, std::vector<std::string>>> rules;
    int first_line = 0;
  } sub;
  struct PendingLabel {
    std::vector<std::string> tokens;
    int line_no;
    bool second;
    bool stationary;
  };
  std::vector<PendingLabel> pending_labels;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];

    if (head == "group") {
      if (doc.group) fail(line_no, "group already declared");
      if (tokens.size() < 2) fail(line_no, "group needs a kind");
      if (tokens[1] == "cyclic") {
        if (tokens.size() != 3) fail(line_no, "usage: group cyclic <n>");
        doc.group = FiniteGroup::cyclic(parse_int(tokens[2], line_no, "n"));
      } else if (tokens[1] == "symmetric") {
        if (tokens.size() != 3) fail(line_no, "usage: group symmetric <n>");
        doc.group = FiniteGroup::symmetric(parse_int(tokens[2], line_no, "n"));
      } else if (tokens[1] == "table") {
        if (tokens.size() < 3) fail(line_no, "usage: group table <n> <n^2 entries>");
        const int n = parse_int(tokens[2], line_no, "n");
        if (static_cast<int>(tokens.size()) != 3 + n * n)
          fail(line_no, "group table needs exactly n^2 entries");
        std::vector<int> table;
        for (int i = 0; i < n * n; ++i)
          table.push_back(parse_int(tokens[3 + i], line_no, "table entry"));
        try {
          doc.group = FiniteGroup::from_table(n, std::move(table));
        } catch (const Error& e) {
          fail(line_no, e.what());
        }
      } else {
        fail(line_no, "unknown group kind '" + tokens[1] + "'");
      }
    } else if (head == "alphabet") {
      if (!sub.alphabet.empty()) fail(line_no, "alphabet already declared");
      if (tokens.size() < 2) fail(line_no, "alphabet needs at least one letter");
      sub.alphabet.assign(tokens.begin() + 1, tokens.end());
      sub.first_line = line_no;
      for (std::size_t i = 0; i < sub.alphabet.size(); ++i)
        for (std::size_t j = i + 1; j < sub.alphabet.size(); ++j)
          if (sub.alphabet[i] == sub.alphabet[j])
            fail(line_no, "duplicate letter '" + sub.alphabet[i] + "'");
    } else if (head == "sub") {
      if (tokens.size() < 4 || tokens[2] != "->")
        fail(line_no, "usage: sub <letter> -> <letters...>");
      sub.rules.push_back({tokens[1], {tokens.begin() + 3, tokens.end()}});
    } else if (head == "vertices") {
      if (tokens.size() != 3) fail(line_no, "usage: vertices <level> <count>");
      const int level = parse_int(tokens[1], line_no, "level");
      const int count = parse_int(tokens[2], line_no, "count");
      if (level < 1) fail(line_no, "vertex levels start at 1");
      if (count < 1) fail(line_no, "levels need at least one vertex");
      if (static_cast<int>(doc.level_sizes.size()) < level) {
        doc.level_sizes.resize(level, -1);
        doc.level_edges.resize(level);
      }
      if (doc.level_sizes[level - 1] >= 0)
        fail(line_no, "level " + tokens[1] + " already declared");
      doc.level_sizes[level - 1] = count;
      doc.has_diagram = true;
    } else if (head == "edge") {
      if (tokens.size() != 4) fail(line_no, "usage: edge <level> <source> <range>");
      const int level = parse_int(tokens[1], line_no, "level");
      if (level < 1) fail(line_no, "edge levels start at 1");
      if (static_cast<int>(doc.level_sizes.size()) < level) {
        doc.level_sizes.resize(level, -1);
        doc.level_edges.resize(level);
      }
      doc.level_edges[level - 1].push_back(
          Edge{parse_int(tokens[2], line_no, "source"),
               parse_int(tokens[3], line_no, "range")});
      doc.has_diagram = true;
    } else if (head == "stationary") {
      doc.stationary = true;
      doc.has_diagram = true;
    } else if (head == "levels") {
      if (tokens.size() != 2) fail(line_no, "usage: levels <k>");
      doc.declared_levels = parse_int(tokens[1], line_no, "levels");
      if (*doc.declared_levels < 1) fail(line_no, "levels must be at least 1");
      doc.has_diagram = true;
    } else if (head == "order") {
      if (tokens.size() < 4) fail(line_no, "usage: order <level> <vertex> <perm...>");
      SpecDocument::OrderLine ol;
      ol.level = parse_int(tokens[1], line_no, "level");
      ol.vertex = parse_int(tokens[2], line_no, "vertex");
      for (std::size_t i = 3; i < tokens.size(); ++i)
        ol.order.push_back(parse_int(tokens[i], line_no, "edge index"));
      doc.orders.push_back(std::move(ol));
    } else if (head == "label" || head == "label2") {
      if (tokens.size() != 4)
        fail(line_no, "usage: " + head + " <level> <edge> <element>");
      pending_labels.push_back({tokens, line_no, head == "label2", false});
    } else if (head == "label-stationary" || head == "label2-stationary") {
      if (tokens.size() != 4)
        fail(line_no, "usage: " + head + " <letter> <position> <element>");
      pending_labels.push_back({tokens, line_no, head == "label2-stationary", true});
    } else if (head == "depth") {
      if (tokens.size() != 2) fail(line_no, "usage: depth <n>");
      doc.default_depth = parse_int(tokens[1], line_no, "depth");
      doc.default_depth_explicit = true;
    } else if (head == "window") {
      if (tokens.size() != 2) fail(line_no, "usage: window <n>");
      doc.default_window = parse_int(tokens[1], line_no, "window");
    } else if (head == "period-bound") {
      if (tokens.size() != 2) fail(line_no, "usage: period-bound <n>");
      doc.default_period_bound = parse_int(tokens[1], line_no, "period bound");
    } else if (head == "seed") {
      if (tokens.size() != 2) fail(line_no, "usage: seed <letter>");
      // resolved after the alphabet is known
      pending_labels.push_back({tokens, line_no, false, false});
    } else {
      fail(line_no, "unknown directive '" + head + "'");
    }
  }

  // assemble the substitution
  if (!sub.alphabet.empty() || !sub.rules.empty()) {
    if (sub.alphabet.empty()) fail(sub.first_line + 1, "sub lines need an alphabet");
    std::vector<std::vector<int>> images(sub.alphabet.size());
    std::vector<bool> seen(sub.alphabet.size(), false);
    auto letter_index = [&](const std::string& name, int where) {
      auto it = std::find(sub.alphabet.begin(), sub.alphabet.end(), name);
      if (it == sub.alphabet.end())
        fail(where, "undeclared letter '" + name + "'");
      return static_cast<int>(it - sub.alphabet.begin());
    };
    for (const auto& [letter, word] : sub.rules) {
      const int a = letter_index(letter, sub.first_line);
      if (seen[a]) fail(sub.first_line, "two images for letter '" + letter + "'");
      seen[a] = true;
      for (const auto& w : word) images[a].push_back(letter_index(w, sub.first_line));
    }
    for (std::size_t a = 0; a < seen.size(); ++a)
      if (!seen[a])
        fail(sub.first_line, "letter '" + sub.alphabet[a] + "' has no image");
    doc.substitution = Substitution(sub.alphabet, std::move(images));
  }

  if (doc.has_diagram && doc.substitution)
    fail(line_no, "declare either a diagram or a substitution, not both");
  if (!doc.has_diagram && !doc.substitution)
    fail(line_no ? line_no : 1, "no diagram or substitution declared");
  if (doc.has_diagram) {
    for (std::size_t l = 0; l < doc.level_sizes.size(); ++l) {
      if (doc.level_sizes[l] < 0)
        fail(line_no, "level " + std::to_string(l + 1) + " has edges but no vertices line");
    }
    if (doc.declared_levels &&
        static_cast<int>(doc.level_sizes.size()) > *doc.declared_levels)
      fail(line_no, "more levels declared than the levels line allows");
    if (doc.level_sizes.empty())
      fail(line_no ? line_no : 1, "no diagram or substitution declared");
  }

  // resolve labels and the seed
  for (const auto& pl : pending_labels) {
    const auto& t = pl.tokens;
    if (t[0] == "seed") {
      if (!doc.substitution) fail(pl.line_no, "seed requires a substitution");
      doc.seed_letter = doc.substitution->letter(t[1]);
      continue;
    }
    if (!doc.group) fail(pl.line_no, "labels need a group declaration");
    const int value = parse_element(*doc.group, t[3], pl.line_no);
    if (pl.stationary) {
      if (!doc.substitution)
        fail(pl.line_no, "stationary labels require a substitution");
      const int letter = [&] {
        try {
          return doc.substitution->letter(t[1]);
        } catch (const Error&) {
          fail(pl.line_no, "undeclared letter '" + t[1] + "'");
        }
      }();
      const int pos = parse_int(t[2], pl.line_no, "position");
      if (pos < 1 || pos > static_cast<int>(doc.substitution->image(letter).size()))
        fail(pl.line_no, "position outside the image of '" + t[1] + "'");
      auto& dst = pl.second ? doc.stationary_labels2 : doc.stationary_labels;
      dst.push_back({letter, pos, value});
    } else {
      if (!doc.has_diagram)
        fail(pl.line_no, "per-edge labels require an explicit diagram");
      auto& dst = pl.second ? doc.labels2 : doc.labels;
      dst.push_back({parse_int(t[1], pl.line_no, "level"),
                     parse_int(t[2], pl.line_no, "edge"), value});
    }
  }
  if (!doc.orders.empty() && doc.substitution)
    fail(line_no, "order lines require an explicit diagram");
  if (doc.labelled() && !doc.group) fail(line_no, "labels need a group");
  return doc;
}

namespace {

StationaryLabelling collect_stationary(
    const SpecDocument& doc, const std::vector<SpecDocument::StationaryLabelLine>& lines) {
  const Substitution& s = *doc.substitution;
  StationaryLabelling lab;
  lab.group = *doc.group;
  lab.values.resize(s.alphabet_size());
  for (int b = 0; b < s.alphabet_size(); ++b)
    lab.values[b].assign(s.image(b).size(), doc.group->identity());
  for (const auto& l : lines) lab.values[l.letter][l.position - 1] = l.value;
  return lab;
}

}  // namespace

BuiltSystem build_system(const SpecDocument& doc, int depth) {
  BuiltSystem sys;
  sys.group = doc.group;
  sys.substitution = doc.substitution;

  if (doc.substitution) {
    const Substitution& s = *doc.substitution;
    sys.base = diagram_from_substitution(s, std::max(depth, 2));
    sys.vertex_names.push_back({"*"});
    for (int n = 1; n <= sys.base.diagram().depth(); ++n)
      sys.vertex_names.push_back(s.letter_names());
    if (doc.labelled() || doc.group) {
      if (doc.group) {
        const auto st = collect_stationary(doc, doc.stationary_labels);
        sys.stationary_labelling = st;
        sys.lambda = stationary_edge_labelling(s, st, sys.base.diagram());
        if (doc.second_labelling())
          sys.mu = stationary_edge_labelling(
              s, collect_stationary(doc, doc.stationary_labels2), sys.base.diagram());
      }
    }
    return sys;
  }

  BratteliDiagram d;
  for (std::size_t l = 0; l < doc.level_sizes.size(); ++l) {
    try {
      d.add_level(doc.level_sizes[l], doc.level_edges[l]);
    } catch (const Error& e) {
      throw Error("parse", "level " + std::to_string(l + 1) + ": " + e.what());
    }
  }
  d.set_stationary(doc.stationary);
  OrderedBratteliDiagram od(std::move(d));
  bool any_default_order = od.diagram().depth() > 0 && doc.orders.empty();
  for (const auto& ol : doc.orders) {
    try {
      od.set_order(ol.level, ol.vertex, ol.order);
    } catch (const Error& e) {
      throw Error("parse", std::string("order line: ") + e.what() +
                               " (not a permutation of the incoming edges?)");
    }
  }
  // extension after the order lines so the repeated block carries the
  // declared order
  const int want = std::max(depth, doc.declared_levels.value_or(0));
  if (doc.stationary && od.diagram().depth() < want) od.extend_to(want);
  sys.base = std::move(od);
  if (any_default_order)
    sys.warnings.push_back(
        "no order lines; using edge declaration order for every vertex");
  sys.vertex_names.push_back({"*"});
  for (int n = 1; n <= sys.base.diagram().depth(); ++n) {
    std::vector<std::string> names;
    for (int v = 0; v < sys.base.diagram().level_size(n); ++v)
      names.push_back("v" + std::to_string(v));
    sys.vertex_names.push_back(names);
  }

  if (doc.group) {
    auto build_labels = [&](const std::vector<SpecDocument::LabelLine>& lines) {
      Labelling lab(*doc.group);
      const BratteliDiagram& dd = sys.base.diagram();
      const int declared = static_cast<int>(doc.level_sizes.size());
      for (int n = 1; n <= std::min(declared, dd.depth()); ++n)
        for (int e = 0; e < dd.edge_count(n); ++e) lab.set(n, e, doc.group->identity());
      for (const auto& l : lines) {
        if (l.level < 1 || l.level > dd.depth() || l.edge < 0 ||
            l.edge >= dd.edge_count(l.level))
          throw Error("parse", "label for unknown edge " + std::to_string(l.edge) +
                                   " at level " + std::to_string(l.level));
        lab.set(l.level, l.edge, l.value);
      }
      if (lab.depth() < dd.depth()) lab.extend_to(dd, dd.depth());
      return lab;
    };
    if (doc.labelled() || doc.group) sys.lambda = build_labels(doc.labels);
    if (doc.second_labelling()) sys.mu = build_labels(doc.labels2);
  }
  return sys;
}

}  // namespace adic
