#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "relations.hpp"

namespace c2crystal {

/// A bare colored digraph for auditing: tableau payloads are optional, so the
/// auditor accepts graphs produced elsewhere.  Ids are dense 0..n-1.
struct AuditGraph {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;  // empty string when a vertex has no payload
};

inline AuditGraph to_audit_graph(const CrystalGraph& g) {
  AuditGraph a;
  a.n = static_cast<int>(g.vertices.size());
  a.edges = g.edges;
  a.labels.reserve(g.vertices.size());
  for (const Tableau& t : g.vertices) a.labels.push_back(render_tableau(t));
  return a;
}

/// Lenient loader for the graph JSON schema: "shape" and "source" are ignored
/// when present, "tableau" payloads are optional.  Dangling ids, non-dense ids
/// and bad colors are schema violations and throw.
inline AuditGraph load_audit_graph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("audit: malformed JSON: ") + e.what());
  }
  try {
    AuditGraph g;
    const auto& vs = j.at("vertices");
    g.n = static_cast<int>(vs.size());
    g.labels.assign(vs.size(), "");
    std::vector<bool> seen(vs.size(), false);
    for (const auto& rec : vs) {
      const int id = rec.at("id").get<int>();
      if (id < 0 || id >= g.n || seen[static_cast<std::size_t>(id)])
        throw std::invalid_argument("audit: vertex ids must be dense and unique");
      seen[static_cast<std::size_t>(id)] = true;
      if (rec.contains("tableau"))
        g.labels[static_cast<std::size_t>(id)] = rec.at("tableau").get<std::string>();
    }
    for (const auto& rec : j.at("edges")) {
      const int from = rec.at("from").get<int>();
      const int to = rec.at("to").get<int>();
      const int color = rec.at("color").get<int>();
      if (from < 0 || from >= g.n || to < 0 || to >= g.n)
        throw std::invalid_argument("audit: dangling edge endpoint");
      if (color != 1 && color != 2)
        throw std::invalid_argument("audit: edge color must be 1 or 2");
      g.edges.push_back({from, to, static_cast<Color>(color)});
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("audit: schema violation: ") + e.what());
  }
}

struct AuditFinding {
  int vertex = 0;
  std::string reason;
};

struct AuditReport {
  int checked_raising = 0;   // vertices with incoming edges of both colors
  int checked_lowering = 0;  // vertices with outgoing edges of both colors
  std::vector<std::string> structural;  // well-formedness violations
  std::vector<AuditFinding> findings;

  bool clean() const { return structural.empty() && findings.empty(); }
};

/// Necessary-condition audit: every vertex with incoming edges of both colors
/// must have a minimal mixed coincidence of degree 2, 4, 5 or 7 with exactly
/// the expected witness words, and likewise for outgoing edges (the
/// lowering-operator form of the same statement).  A clean audit does not
/// prove the graph is a crystal; a finding proves it is not one.
inline AuditReport audit_graph(const AuditGraph& g) {
  AuditReport report;

  std::vector<std::array<int, 2>> out_deg(static_cast<std::size_t>(g.n), {0, 0});
  std::vector<std::array<int, 2>> in_deg(static_cast<std::size_t>(g.n), {0, 0});
  for (const Edge& e : g.edges) {
    ++out_deg[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(color_index(e.color))];
    ++in_deg[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(color_index(e.color))];
  }
  for (int v = 0; v < g.n; ++v)
    for (Color c : kColors) {
      if (out_deg[static_cast<std::size_t>(v)][static_cast<std::size_t>(color_index(c))] > 1)
        report.structural.push_back("vertex " + std::to_string(v) +
                                    ": multiple outgoing edges of color " +
                                    std::to_string(color_value(c)));
      if (in_deg[static_cast<std::size_t>(v)][static_cast<std::size_t>(color_index(c))] > 1)
        report.structural.push_back("vertex " + std::to_string(v) +
                                    ": multiple incoming edges of color " +
                                    std::to_string(color_value(c)));
    }
  if (!report.structural.empty()) return report;  // walks would be ambiguous

  const AdjacencyIndex adj = AdjacencyIndex::build(g.n, g.edges);
  auto check_one = [&](int v, bool upward) -> std::optional<std::string> {
    const auto rep = detect_relation_in_graph(adj, v, upward, kMaxRelationDegree);
    const char* side = upward ? "raising" : "lowering";
    if (!rep)
      return std::string(side) + ": no mixed coincidence within length " +
             std::to_string(kMaxRelationDegree);
    if (!is_relation_degree(rep->degree))
      return std::string(side) + ": minimal mixed coincidence at length " +
             std::to_string(rep->degree);
    if (rep->groups.size() != 1)
      return std::string(side) + ": " + std::to_string(rep->groups.size()) +
             " coinciding targets at length " + std::to_string(rep->degree);
    if (!witnesses_match(rep->groups.front(), expected_witnesses(rep->degree)))
      return std::string(side) + ": witness words differ from the degree-" +
             std::to_string(rep->degree) + " pattern";
    return std::nullopt;
  };

  for (int v = 0; v < g.n; ++v) {
    if (adj.prev(v, Color::One) != -1 && adj.prev(v, Color::Two) != -1) {
      ++report.checked_raising;
      if (auto why = check_one(v, /*upward=*/true)) report.findings.push_back({v, *why});
    }
    if (adj.next(v, Color::One) != -1 && adj.next(v, Color::Two) != -1) {
      ++report.checked_lowering;
      if (auto why = check_one(v, /*upward=*/false)) report.findings.push_back({v, *why});
    }
  }
  return report;
}

}  // namespace c2crystal
