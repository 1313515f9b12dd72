#pragma once

#include <array>
#include <tuple>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "operators.hpp"
#include "tableau.hpp"

namespace c2crystal {

struct Edge {
  int from = 0;
  int to = 0;
  Color color = Color::One;

  // canonical edge order is (from, color, to); at most one edge shares (from, color)
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& x, const Edge& y) {
    return std::tie(x.from, x.color, x.to) <=> std::tie(y.from, y.color, y.to);
  }
};

/// Finite edge-colored digraph on tableau vertices.  An edge (u, v, c) means
/// f_c(u) = v and e_c(v) = u.  Vertex ids are dense 0..n-1; `source` is the
/// highest-weight vertex of a generated crystal (for a dual graph, the old sink).
struct CrystalGraph {
  Shape shape;
  std::vector<Tableau> vertices;
  std::vector<Edge> edges;
  int source = 0;
};

inline bool operator==(const CrystalGraph& a, const CrystalGraph& b) {
  return a.shape == b.shape && a.vertices == b.vertices && a.edges == b.edges &&
         a.source == b.source;
}

/// Per-color successor/predecessor lookup; -1 means none.  Building throws if
/// some (vertex, color) pair has more than one outgoing or incoming edge.
struct AdjacencyIndex {
  std::vector<std::array<int, 2>> out, in;

  static AdjacencyIndex build(int n, const std::vector<Edge>& edges) {
    AdjacencyIndex idx;
    idx.out.assign(static_cast<std::size_t>(n), {-1, -1});
    idx.in.assign(static_cast<std::size_t>(n), {-1, -1});
    for (const Edge& e : edges) {
      auto& o = idx.out[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(color_index(e.color))];
      auto& i = idx.in[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(color_index(e.color))];
      if (o != -1 || i != -1)
        throw std::invalid_argument("AdjacencyIndex: duplicate edge for a (vertex, color) pair");
      o = e.to;
      i = e.from;
    }
    return idx;
  }

  int next(int v, Color c) const {
    return out[static_cast<std::size_t>(v)][static_cast<std::size_t>(color_index(c))];
  }
  int prev(int v, Color c) const {
    return in[static_cast<std::size_t>(v)][static_cast<std::size_t>(color_index(c))];
  }
};

inline AdjacencyIndex make_adjacency(const CrystalGraph& g) {
  return AdjacencyIndex::build(static_cast<int>(g.vertices.size()), g.edges);
}

/// Breadth-first closure of the highest-weight tableau under the lowering
/// operators.  Ids follow discovery order level by level, with each level's new
/// vertices ordered canonically, so generation is reproducible bit for bit.
inline CrystalGraph generate(Shape s) {
  if (!s.valid()) throw std::invalid_argument("generate: invalid shape");
  CrystalGraph g;
  g.shape = s;
  g.source = 0;

  const Tableau hw = highest_weight_tableau(s);
  std::map<Tableau, int> index;
  index.emplace(hw, 0);
  g.vertices.push_back(hw);

  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::set<Tableau> discovered;
    for (int id : frontier)
      for (Color c : kColors)
        if (auto u = apply_f(g.vertices[static_cast<std::size_t>(id)], c))
          if (!index.count(*u)) discovered.insert(std::move(*u));
    std::vector<int> next;
    next.reserve(discovered.size());
    for (const Tableau& u : discovered) {
      const int id = static_cast<int>(g.vertices.size());
      index.emplace(u, id);
      g.vertices.push_back(u);
      next.push_back(id);
    }
    frontier = std::move(next);
  }

  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    for (Color c : kColors)
      if (auto u = apply_f(g.vertices[static_cast<std::size_t>(v)], c))
        g.edges.push_back({v, index.at(*u), c});
  return g;
}

/// The unique vertex with no outgoing edges.
inline int find_sink(const CrystalGraph& g) {
  std::vector<bool> has_out(g.vertices.size(), false);
  for (const Edge& e : g.edges) has_out[static_cast<std::size_t>(e.from)] = true;
  int sink = -1;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (!has_out[v]) {
      if (sink != -1) throw std::invalid_argument("find_sink: multiple sinks");
      sink = static_cast<int>(v);
    }
  }
  if (sink == -1) throw std::invalid_argument("find_sink: no sink");
  return sink;
}

/// Same vertices, all edges reversed with colors kept; source becomes the old
/// sink.  Vertex labels are carried along unchanged, so the tableau-to-edge
/// correspondence of generated graphs does not apply to a dual graph.
inline CrystalGraph dual(const CrystalGraph& g) {
  CrystalGraph d;
  d.shape = g.shape;
  d.vertices = g.vertices;
  d.source = find_sink(g);
  d.edges.reserve(g.edges.size());
  for (const Edge& e : g.edges) d.edges.push_back({e.to, e.from, e.color});
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

inline std::string export_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    os << "  " << v << " [label=\"" << render_tableau(g.vertices[v]) << "\"];\n";
  for (const Edge& e : g.edges)
    os << "  " << e.from << " -> " << e.to << " [label=\"" << color_value(e.color) << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string export_json(const CrystalGraph& g) {
  nlohmann::ordered_json j;
  j["shape"] = {g.shape.lambda1, g.shape.lambda2};
  j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    nlohmann::ordered_json rec;
    rec["id"] = v;
    rec["tableau"] = render_tableau(g.vertices[v]);
    j["vertices"].push_back(std::move(rec));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges) {
    nlohmann::ordered_json rec;
    rec["from"] = e.from;
    rec["to"] = e.to;
    rec["color"] = color_value(e.color);
    j["edges"].push_back(std::move(rec));
  }
  j["source"] = g.source;
  return j.dump(2) + "\n";
}

/// Strict import of the JSON graph schema.  Checks dense ids, in-range edge
/// endpoints, colors in {1,2}, per-(vertex, color) uniqueness, and that every
/// tableau payload parses and validates.
inline CrystalGraph import_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("import_json: malformed JSON: ") + e.what());
  }
  try {
    CrystalGraph g;
    g.shape = Shape{j.at("shape").at(0).get<int>(), j.at("shape").at(1).get<int>()};
    if (!g.shape.valid()) throw std::invalid_argument("import_json: invalid shape");

    const auto& vs = j.at("vertices");
    g.vertices.resize(vs.size());
    std::vector<bool> seen(vs.size(), false);
    for (const auto& rec : vs) {
      const int id = rec.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(vs.size()) || seen[static_cast<std::size_t>(id)])
        throw std::invalid_argument("import_json: vertex ids must be dense and unique");
      seen[static_cast<std::size_t>(id)] = true;
      Tableau t = parse_tableau(rec.at("tableau").get<std::string>());
      if (t.shape() != g.shape)
        throw std::invalid_argument("import_json: tableau shape mismatch");
      const auto violations = validate(t);
      if (!violations.empty())
        throw std::invalid_argument("import_json: invalid tableau '" +
                                    rec.at("tableau").get<std::string>() +
                                    "': " + violations.front().message());
      g.vertices[static_cast<std::size_t>(id)] = std::move(t);
    }

    for (const auto& rec : j.at("edges")) {
      const int from = rec.at("from").get<int>();
      const int to = rec.at("to").get<int>();
      const int color = rec.at("color").get<int>();
      if (from < 0 || from >= static_cast<int>(g.vertices.size()) || to < 0 ||
          to >= static_cast<int>(g.vertices.size()))
        throw std::invalid_argument("import_json: dangling edge endpoint");
      if (color != 1 && color != 2)
        throw std::invalid_argument("import_json: edge color must be 1 or 2");
      g.edges.push_back({from, to, static_cast<Color>(color)});
    }
    make_adjacency(g);  // rejects duplicate (vertex, color) pairs

    g.source = j.at("source").get<int>();
    if (g.source < 0 || g.source >= static_cast<int>(g.vertices.size()))
      throw std::invalid_argument("import_json: source out of range");
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("import_json: schema violation: ") + e.what());
  }
}

}  // namespace c2crystal
