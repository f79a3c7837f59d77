#include "adic/emit.hpp"

#include <sstream>

namespace adic {

using nlohmann::json;

json diagram_to_json(const OrderedBratteliDiagram& od,
                     const std::vector<std::vector<std::string>>& names,
                     const Labelling* labels) {
  const BratteliDiagram& d = od.diagram();
  json j;
  j["kind"] = "ordered-bratteli-diagram";
  j["depth"] = d.depth();
  j["stationary"] = d.stationary();
  json sizes = json::array();
  for (int n = 0; n <= d.depth(); ++n) sizes.push_back(d.level_size(n));
  j["level_sizes"] = sizes;
  if (!names.empty()) j["vertex_names"] = names;
  if (labels) j["group_order"] = labels->group().order();
  json edges = json::array();
  for (int n = 1; n <= d.depth(); ++n) {
    for (int e = 0; e < d.edge_count(n); ++e) {
      json je;
      je["level"] = n;
      je["index"] = e;
      je["source"] = d.edge(n, e).source;
      je["range"] = d.edge(n, e).range;
      je["rank"] = od.rank_of(n, e);
      if (labels) je["label"] = labels->value(n, e);
      edges.push_back(je);
    }
  }
  j["edges"] = edges;
  return j;
}

ParsedDiagram diagram_from_json(const json& j, const FiniteGroup* group) {
  if (!j.contains("level_sizes") || !j.contains("edges"))
    throw Error("parse", "diagram JSON needs level_sizes and edges");
  ParsedDiagram out;
  const auto sizes = j.at("level_sizes").get<std::vector<int>>();
  const int depth = static_cast<int>(sizes.size()) - 1;
  std::vector<std::vector<Edge>> edges(depth + 1);
  std::vector<std::vector<int>> ranks(depth + 1);
  std::vector<std::vector<int>> labels(depth + 1);
  for (const auto& je : j.at("edges")) {
    const int level = je.at("level").get<int>();
    if (level < 1 || level > depth) throw Error("parse", "edge level out of range");
    const int index = je.at("index").get<int>();
    if (index != static_cast<int>(edges[level].size()))
      throw Error("parse", "edges must be listed densely per level");
    edges[level].push_back(
        Edge{je.at("source").get<int>(), je.at("range").get<int>()});
    ranks[level].push_back(je.at("rank").get<int>());
    if (je.contains("label")) labels[level].push_back(je.at("label").get<int>());
  }
  BratteliDiagram d;
  for (int n = 1; n <= depth; ++n) d.add_level(sizes[n], edges[n]);
  if (j.value("stationary", false)) d.set_stationary(true);
  OrderedBratteliDiagram od(std::move(d));
  for (int n = 1; n <= depth; ++n) {
    for (int v = 0; v < od.diagram().level_size(n); ++v) {
      const auto& inc = od.diagram().incoming(n, v);
      std::vector<int> order(inc.size());
      for (int e : inc) {
        const int r = ranks[n][e];
        if (r < 0 || r >= static_cast<int>(order.size()))
          throw Error("parse", "edge ranks do not form a permutation");
        order[r] = e;
      }
      od.set_order(n, v, order);
    }
  }
  out.diagram = std::move(od);
  if (j.contains("vertex_names"))
    out.names = j.at("vertex_names").get<std::vector<std::vector<std::string>>>();
  bool have_labels = group != nullptr && depth >= 1;
  for (int n = 1; n <= depth && have_labels; ++n)
    have_labels = labels[n].size() == edges[n].size();
  if (have_labels) {
    Labelling lab(*group);
    for (int n = 1; n <= depth; ++n) lab.set_level_values(n, labels[n]);
    out.labels = std::move(lab);
  }
  return out;
}

std::string diagram_to_dot(const OrderedBratteliDiagram& od,
                           const std::vector<std::vector<std::string>>& names,
                           const Labelling* labels) {
  const BratteliDiagram& d = od.diagram();
  std::ostringstream out;
  out << "digraph bratteli {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=circle];\n";
  for (int n = 0; n <= d.depth(); ++n) {
    out << "  subgraph cluster_level_" << n << " {\n";
    out << "    label=\"level " << n << "\";\n";
    for (int v = 0; v < d.level_size(n); ++v) {
      out << "    v" << n << "_" << v;
      if (n < static_cast<int>(names.size()) &&
          v < static_cast<int>(names[n].size()))
        out << " [label=\"" << names[n][v] << "\"]";
      out << ";\n";
    }
    out << "  }\n";
  }
  for (int n = 1; n <= d.depth(); ++n) {
    for (int e = 0; e < d.edge_count(n); ++e) {
      const Edge& ed = d.edge(n, e);
      out << "  v" << (n - 1) << "_" << ed.source << " -> v" << n << "_"
          << ed.range << " [rank=" << od.rank_of(n, e);
      if (labels)
        out << ", g=\"" << labels->group().name(labels->value(n, e)) << "\"";
      out << ", label=\"" << od.rank_of(n, e);
      if (labels)
        out << "|" << labels->group().name(labels->value(n, e));
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string text_digest(const std::string& text) {
  unsigned long long hash = 1469598103934665603ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << hash;
  return out.str();
}

}  // namespace adic
