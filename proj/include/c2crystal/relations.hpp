#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystal.hpp"
#include "operators.hpp"

namespace c2crystal {

/// Largest relation degree that occurs; the word search is bounded by it.
inline constexpr int kMaxRelationDegree = 7;

/// Colors in application order: front() acts first.  The composition
/// e_{c_n} ... e_{c_1} corresponds to the word (c_1, ..., c_n).
using OperatorWord = std::vector<Color>;

inline std::string word_string(const OperatorWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s.push_back(',');
    s.push_back(static_cast<char>('0' + color_value(w[i])));
  }
  return s;
}

/// Left fold of apply_e over the word; absence is absorbing.
inline std::optional<Tableau> apply_word(const Tableau& t, const OperatorWord& w) {
  std::optional<Tableau> cur = t;
  for (Color c : w) {
    cur = apply_e(*cur, c);
    if (!cur) return std::nullopt;
  }
  return cur;
}

/// Words of equal length reaching the same target, split by first-applied color.
/// Both word lists are sorted; a group is "mixed" when both lists are nonempty.
template <class State>
struct MixedGroup {
  State target;
  std::vector<OperatorWord> first_1, first_2;
};

template <class State>
struct RelationSearch {
  int degree = 0;                                    // minimal mixed length found
  std::vector<MixedGroup<State>> groups;             // mixed groups at that length
  std::vector<std::pair<int, int>> same_first_below; // (length, #same-first-color
                                                     // coincidence buckets) below it
};

namespace detail {

/// Exhaustive search over all 2^n operator words for n = 2..max_len.  The
/// relation degree is the least n at which some target is reached by words with
/// both first-applied colors.  Coincidences among words sharing their first
/// color are legal consequences of relations higher up; they are only counted.
template <class State, class Step>
std::optional<RelationSearch<State>> relation_search(const State& start, Step step,
                                                     int max_len) {
  RelationSearch<State> out;
  for (int n = 2; n <= max_len; ++n) {
    std::map<State, std::pair<std::vector<OperatorWord>, std::vector<OperatorWord>>> buckets;
    const std::uint32_t total = 1u << n;
    for (std::uint32_t bits = 0; bits < total; ++bits) {
      OperatorWord w(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k)
        w[static_cast<std::size_t>(k)] = (bits >> k & 1u) ? Color::Two : Color::One;
      std::optional<State> cur = start;
      for (std::size_t k = 0; k < w.size() && cur; ++k) cur = step(*cur, w[k]);
      if (!cur) continue;
      auto& bucket = buckets[*cur];
      (w.front() == Color::One ? bucket.first : bucket.second).push_back(std::move(w));
    }
    int same_first = 0;
    for (auto& [target, bucket] : buckets) {
      if (!bucket.first.empty() && !bucket.second.empty()) {
        std::sort(bucket.first.begin(), bucket.first.end());
        std::sort(bucket.second.begin(), bucket.second.end());
        out.groups.push_back({target, bucket.first, bucket.second});
      } else if (bucket.first.size() + bucket.second.size() >= 2) {
        ++same_first;
      }
    }
    if (!out.groups.empty()) {
      out.degree = n;
      return out;
    }
    if (same_first > 0) out.same_first_below.emplace_back(n, same_first);
  }
  return std::nullopt;
}

}  // namespace detail

using RelationReport = RelationSearch<Tableau>;
using GraphRelationReport = RelationSearch<int>;

/// Brute-force word search above a tableau.  Requires both raising operators
/// to be defined on t.
inline std::optional<RelationReport> detect_relation(const Tableau& t,
                                                     int max_len = kMaxRelationDegree) {
  if (epsilon(t, Color::One) == 0 || epsilon(t, Color::Two) == 0)
    throw std::invalid_argument("detect_relation: both raising operators must be defined");
  return detail::relation_search<Tableau>(
      t, [](const Tableau& u, Color c) { return apply_e(u, c); }, max_len);
}

/// The same search over a bare colored digraph.  Upward walks follow incoming
/// edges backwards (raising); downward walks follow outgoing edges (lowering).
inline std::optional<GraphRelationReport> detect_relation_in_graph(
    const AdjacencyIndex& adj, int start, bool upward, int max_len = kMaxRelationDegree) {
  return detail::relation_search<int>(
      start,
      [&adj, upward](int v, Color c) -> std::optional<int> {
        const int u = upward ? adj.prev(v, c) : adj.next(v, c);
        if (u == -1) return std::nullopt;
        return u;
      },
      max_len);
}

/// Relation degree from the statistics table:
///
///            A<B  A=B  A=B+1  A>B+1
///     C<D     2    2     2      2
///     C=D     4    7     4      2
///     C>D     2    5     4      2
inline int classify_by_stats(const AbcdStats& s) {
  if (s.c < s.d) return 2;
  if (s.c == s.d) {
    if (s.a < s.b) return 4;
    if (s.a == s.b) return 7;
    if (s.a == s.b + 1) return 4;
    return 2;
  }
  if (s.a < s.b) return 2;
  if (s.a == s.b) return 5;
  if (s.a == s.b + 1) return 4;
  return 2;
}

struct WitnessSets {
  std::vector<OperatorWord> first_1, first_2;  // sorted
};

/// The exact minimal-coincidence word sets per degree, in application order.
/// In composition notation these are, reading right to left:
///   degree 2:  e2 e1 v = e1 e2 v
///   degree 4:  e1 e2^2 e1 v = e2 e1^2 e2 v
///   degree 5:  e2 e1^3 e2 v = e1 e2 e1 e2 e1 v = e1^2 e2^2 e1 v
///   degree 7:  e2 e1^3 e2^2 e1 v = e2 e1^2 e2 e1 e2 e1 v
///            = e1 e2^2 e1^3 e2 v = e1 e2 e1 e2 e1^2 e2 v
/// The degree 5 and 7 lists each contain same-first-color pairs because of the
/// degree 2 relations embedded two steps up.
inline WitnessSets expected_witnesses(int degree) {
  const Color c1 = Color::One, c2 = Color::Two;
  switch (degree) {
    case 2:
      return {{{c1, c2}}, {{c2, c1}}};
    case 4:
      return {{{c1, c2, c2, c1}}, {{c2, c1, c1, c2}}};
    case 5:
      return {{{c1, c2, c1, c2, c1}, {c1, c2, c2, c1, c1}}, {{c2, c1, c1, c1, c2}}};
    case 7:
      return {{{c1, c2, c1, c2, c1, c1, c2}, {c1, c2, c2, c1, c1, c1, c2}},
              {{c2, c1, c1, c1, c2, c2, c1}, {c2, c1, c1, c2, c1, c2, c1}}};
    default:
      throw std::invalid_argument("expected_witnesses: degree must be 2, 4, 5 or 7");
  }
}

inline bool is_relation_degree(int d) { return d == 2 || d == 4 || d == 5 || d == 7; }

template <class State>
inline bool witnesses_match(const MixedGroup<State>& g, const WitnessSets& expected) {
  return g.first_1 == expected.first_1 && g.first_2 == expected.first_2;
}

struct VertexCheck {
  bool passed = false;
  int expected_degree = 0;
  int found_degree = 0;  // 0 when nothing was found within the bound
  std::string detail;    // empty on pass
};

/// Full check of one applicable vertex: the search must find the degree the
/// statistics predict, with exactly one coinciding target whose witness word
/// sets match the expected pattern, and nothing mixed any shorter.
inline VertexCheck verify_vertex(const Tableau& t) {
  if (epsilon(t, Color::One) == 0 || epsilon(t, Color::Two) == 0)
    throw std::invalid_argument("verify_vertex: both raising operators must be defined");
  VertexCheck check;
  check.expected_degree = classify_by_stats(abcd(t));
  const auto rep = detect_relation(t, kMaxRelationDegree);
  if (!rep) {
    check.detail = "no mixed coincidence within length " + std::to_string(kMaxRelationDegree);
    return check;
  }
  check.found_degree = rep->degree;
  if (rep->degree != check.expected_degree) {
    check.detail = "found degree " + std::to_string(rep->degree) + ", statistics predict " +
                   std::to_string(check.expected_degree);
    return check;
  }
  if (rep->groups.size() != 1) {
    check.detail = "expected one coinciding target, found " + std::to_string(rep->groups.size());
    return check;
  }
  if (!witnesses_match(rep->groups.front(), expected_witnesses(rep->degree))) {
    std::ostringstream os;
    os << "witness words differ from the degree-" << rep->degree << " pattern:";
    for (const auto& w : rep->groups.front().first_1) os << " (" << word_string(w) << ")";
    os << " |";
    for (const auto& w : rep->groups.front().first_2) os << " (" << word_string(w) << ")";
    check.detail = os.str();
    return check;
  }
  check.passed = true;
  return check;
}

struct DegreeCounts {
  std::array<int, 4> counts{};  // degrees 2, 4, 5, 7

  static int slot(int degree) {
    switch (degree) {
      case 2: return 0;
      case 4: return 1;
      case 5: return 2;
      case 7: return 3;
    }
    throw std::invalid_argument("DegreeCounts: bad degree");
  }
  int& of(int degree) { return counts[static_cast<std::size_t>(slot(degree))]; }
  int of(int degree) const { return counts[static_cast<std::size_t>(slot(degree))]; }
  int total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
  bool operator==(const DegreeCounts&) const = default;
};

struct CrystalReport {
  Shape shape;
  int vertex_count = 0;
  int applicable_e = 0;  // vertices with both raising operators defined
  int applicable_f = 0;  // vertices with both lowering operators defined
  DegreeCounts e_counts, f_counts;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Verifies the raising-operator statement on every applicable vertex, then the
/// lowering-operator statement through the dual graph, and requires identical
/// per-degree counts on the two sides.
inline CrystalReport verify_crystal(const CrystalGraph& g) {
  CrystalReport report;
  report.shape = g.shape;
  report.vertex_count = static_cast<int>(g.vertices.size());

  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const Tableau& t = g.vertices[v];
    if (epsilon(t, Color::One) == 0 || epsilon(t, Color::Two) == 0) continue;
    ++report.applicable_e;
    const VertexCheck check = verify_vertex(t);
    if (!check.passed) {
      report.failures.push_back("vertex " + std::to_string(v) + " (" + render_tableau(t) +
                                "): " + check.detail);
      continue;
    }
    report.e_counts.of(check.found_degree)++;
  }

  const CrystalGraph d = dual(g);
  const AdjacencyIndex adj = make_adjacency(d);
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    if (adj.prev(v, Color::One) == -1 || adj.prev(v, Color::Two) == -1) continue;
    ++report.applicable_f;
    const auto rep = detect_relation_in_graph(adj, v, /*upward=*/true, kMaxRelationDegree);
    std::string why;
    if (!rep)
      why = "no mixed coincidence within length " + std::to_string(kMaxRelationDegree);
    else if (!is_relation_degree(rep->degree))
      why = "found degree " + std::to_string(rep->degree);
    else if (rep->groups.size() != 1)
      why = "expected one coinciding target, found " + std::to_string(rep->groups.size());
    else if (!witnesses_match(rep->groups.front(), expected_witnesses(rep->degree)))
      why = "witness words differ from the degree-" + std::to_string(rep->degree) + " pattern";
    if (!why.empty()) {
      report.failures.push_back("dual vertex " + std::to_string(v) + ": " + why);
      continue;
    }
    report.f_counts.of(rep->degree)++;
  }

  if (report.e_counts != report.f_counts)
    report.failures.push_back("per-degree counts differ between raising and lowering sides");
  return report;
}

}  // namespace c2crystal
