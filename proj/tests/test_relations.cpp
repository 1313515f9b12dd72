#include <doctest.h>

#include <map>
#include <set>

#include "test_support.hpp"

using namespace c2crystal;
using c2test::T;

namespace {

OperatorWord W(std::initializer_list<int> colors) {
  OperatorWord w;
  for (int c : colors) w.push_back(c == 1 ? Color::One : Color::Two);
  return w;
}

}  // namespace

TEST_CASE("apply_word folds raising steps with absorbing absence") {
  CHECK(apply_word(T("2"), W({1})) == T("1"));
  CHECK(apply_word(T("-2"), W({2, 1})) == T("1"));
  CHECK(apply_word(T("2"), W({1, 1})) == std::nullopt);
  CHECK(apply_word(T("2"), W({})) == T("2"));
}

TEST_CASE("classification covers all twelve statistics cells") {
  auto cell = [](int a, int b, int c, int d) { return classify_by_stats({a, b, c, d}); };
  // row C < D
  CHECK(cell(0, 1, 0, 1) == 2);
  CHECK(cell(1, 1, 0, 1) == 2);
  CHECK(cell(2, 1, 0, 1) == 2);
  CHECK(cell(3, 1, 0, 1) == 2);
  // row C = D
  CHECK(cell(0, 1, 1, 1) == 4);
  CHECK(cell(1, 1, 1, 1) == 7);
  CHECK(cell(2, 1, 1, 1) == 4);
  CHECK(cell(3, 1, 1, 1) == 2);
  // row C > D
  CHECK(cell(0, 1, 1, 0) == 2);
  CHECK(cell(1, 1, 1, 0) == 5);
  CHECK(cell(2, 1, 1, 0) == 4);
  CHECK(cell(3, 1, 1, 0) == 2);
}

TEST_CASE("expected witness word sets") {
  const WitnessSets d2 = expected_witnesses(2);
  CHECK(d2.first_1 == std::vector<OperatorWord>{W({1, 2})});
  CHECK(d2.first_2 == std::vector<OperatorWord>{W({2, 1})});

  const WitnessSets d4 = expected_witnesses(4);
  CHECK(d4.first_1 == std::vector<OperatorWord>{W({1, 2, 2, 1})});
  CHECK(d4.first_2 == std::vector<OperatorWord>{W({2, 1, 1, 2})});

  const WitnessSets d5 = expected_witnesses(5);
  CHECK(d5.first_1 == std::vector<OperatorWord>{W({1, 2, 1, 2, 1}), W({1, 2, 2, 1, 1})});
  CHECK(d5.first_2 == std::vector<OperatorWord>{W({2, 1, 1, 1, 2})});

  const WitnessSets d7 = expected_witnesses(7);
  CHECK(d7.first_1 ==
        std::vector<OperatorWord>{W({1, 2, 1, 2, 1, 1, 2}), W({1, 2, 2, 1, 1, 1, 2})});
  CHECK(d7.first_2 ==
        std::vector<OperatorWord>{W({2, 1, 1, 1, 2, 2, 1}), W({2, 1, 1, 2, 1, 2, 1})});

  CHECK_THROWS_AS(expected_witnesses(3), std::invalid_argument);
}

TEST_CASE("word search on a degree-7 vertex") {
  const Tableau t = T("2 -2 -1 / -2");  // statistics (1,1,1,1)
  const auto rep = detect_relation(t);
  REQUIRE(rep.has_value());
  CHECK(rep->degree == 7);
  REQUIRE(rep->groups.size() == 1);
  CHECK(witnesses_match(rep->groups.front(), expected_witnesses(7)));
}

TEST_CASE("word search on the sink of the (2,1) crystal, checked by hand") {
  const Tableau sink = T("-2 -1 / -1");
  CHECK(abcd(sink) == AbcdStats{1, 1, 0, 0});
  const auto rep = detect_relation(sink);
  REQUIRE(rep.has_value());
  CHECK(rep->degree == 7);
  REQUIRE(rep->groups.size() == 1);
  // the coinciding words meet at the highest-weight tableau
  CHECK(rep->groups.front().target == T("1 1 / 2"));
  CHECK(witnesses_match(rep->groups.front(), expected_witnesses(7)));
  // one of them, step by step
  CHECK(apply_word(sink, W({2, 1, 1, 1, 2, 2, 1})) == T("1 1 / 2"));
}

TEST_CASE("detect_relation requires both raising operators") {
  CHECK_THROWS_AS(detect_relation(T("1 1 / 2")), std::invalid_argument);
  CHECK_THROWS_AS(verify_vertex(T("1 1 / 2")), std::invalid_argument);
}

TEST_CASE("every applicable vertex of small crystals verifies") {
  for (const auto shape : std::vector<Shape>{{2, 1}, {2, 2}, {3, 1}}) {
    for (const Tableau& t : enumerate_tableaux(shape)) {
      if (epsilon(t, Color::One) == 0 || epsilon(t, Color::Two) == 0) continue;
      const VertexCheck check = verify_vertex(t);
      CHECK_MESSAGE(check.passed, render_tableau(t), ": ", check.detail);
      CHECK(check.found_degree == classify_by_stats(abcd(t)));
    }
  }
}

TEST_CASE("degree-2 vertices have the two-step diamond") {
  int seen = 0;
  for (const Tableau& t : c2test::tableaux_up_to(3)) {
    if (epsilon(t, Color::One) == 0 || epsilon(t, Color::Two) == 0) continue;
    const AbcdStats s = abcd(t);
    if (classify_by_stats(s) != 2) continue;
    ++seen;
    const auto a = apply_word(t, W({1, 2}));
    const auto b = apply_word(t, W({2, 1}));
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);
  }
  CHECK(seen > 0);
}

TEST_CASE("the search bound is stable: length 8 finds nothing shorter") {
  for (const Tableau& t : enumerate_tableaux({3, 1})) {
    if (epsilon(t, Color::One) == 0 || epsilon(t, Color::Two) == 0) continue;
    const auto at7 = detect_relation(t, 7);
    const auto at8 = detect_relation(t, 8);
    REQUIRE(at7.has_value());
    REQUIRE(at8.has_value());
    CHECK(at7->degree == at8->degree);
  }
}

TEST_CASE("raising adds a fixed weight step per color") {
  // weight = (#1 - #-1, #2 - #-2); e1 adds (1,-1), e2 adds (0,2)
  auto weight = [](const Tableau& t) {
    std::array<int, 2> w{0, 0};
    auto add = [&w](Letter a, int sign) {
      if (a == Letter::One) w[0] += sign;
      if (a == Letter::OneBar) w[0] -= sign;
      if (a == Letter::Two) w[1] += sign;
      if (a == Letter::TwoBar) w[1] -= sign;
    };
    for (Letter a : t.top()) add(a, 1);
    for (Letter a : t.bottom()) add(a, 1);
    return w;
  };
  for (const Tableau& t : c2test::tableaux_up_to(5)) {
    const auto w = weight(t);
    if (const auto u = apply_e(t, Color::One)) {
      CHECK(weight(*u)[0] == w[0] + 1);
      CHECK(weight(*u)[1] == w[1] - 1);
    }
    if (const auto u = apply_e(t, Color::Two)) {
      CHECK(weight(*u)[0] == w[0]);
      CHECK(weight(*u)[1] == w[1] + 2);
    }
  }
}

TEST_CASE("equal-length words reaching the same vertex use the same color multiset") {
  for (const Tableau& t : c2test::tableaux_up_to(3)) {
    for (int n = 2; n <= 5; ++n) {
      std::map<Tableau, std::set<std::pair<int, int>>> multisets;
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        OperatorWord w;
        int ones = 0;
        for (int k = 0; k < n; ++k) {
          const bool two = bits >> k & 1u;
          w.push_back(two ? Color::Two : Color::One);
          ones += !two;
        }
        if (const auto u = apply_word(t, w)) multisets[*u].insert({ones, n - ones});
      }
      for (const auto& [target, sets] : multisets) CHECK(sets.size() == 1);
    }
  }
}

TEST_CASE("embedded degree-2 relations inside degree-5 and degree-7 witnesses") {
  int deg5 = 0, deg7 = 0;
  for (const Tableau& t : c2test::tableaux_up_to(4)) {
    if (epsilon(t, Color::One) == 0 || epsilon(t, Color::Two) == 0) continue;
    const int degree = classify_by_stats(abcd(t));
    if (degree == 5) {
      ++deg5;
      const auto u = apply_word(t, W({1, 2}));
      REQUIRE(u.has_value());
      const auto rep = detect_relation(*u);
      REQUIRE(rep.has_value());
      CHECK(rep->degree == 2);
    } else if (degree == 7) {
      ++deg7;
      for (const auto& prefix : {W({1, 2}), W({2, 1, 1})}) {
        const auto u = apply_word(t, prefix);
        REQUIRE(u.has_value());
        const auto rep = detect_relation(*u);
        REQUIRE(rep.has_value());
        CHECK(rep->degree == 2);
      }
    }
  }
  CHECK(deg5 > 0);
  CHECK(deg7 > 0);
}

TEST_CASE("graph-level search matches the tableau-level search") {
  for (const auto shape : std::vector<Shape>{{2, 1}, {2, 2}, {3, 1}}) {
    const CrystalGraph g = generate(shape);
    const AdjacencyIndex adj = make_adjacency(g);
    const CrystalGraph d = dual(g);
    const AdjacencyIndex dadj = make_adjacency(d);
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
      const Tableau& t = g.vertices[static_cast<std::size_t>(v)];
      if (epsilon(t, Color::One) == 0 || epsilon(t, Color::Two) == 0) continue;
      const auto semantic = detect_relation(t);
      const auto walked = detect_relation_in_graph(adj, v, /*upward=*/true);
      // raising above v in g is lowering below v in the dual graph
      const auto dual_walked = detect_relation_in_graph(dadj, v, /*upward=*/false);
      REQUIRE(semantic.has_value());
      REQUIRE(walked.has_value());
      REQUIRE(dual_walked.has_value());
      CHECK(semantic->degree == walked->degree);
      CHECK(semantic->degree == dual_walked->degree);
      REQUIRE(walked->groups.size() == 1);
      CHECK(walked->groups.front().first_1 == semantic->groups.front().first_1);
      CHECK(walked->groups.front().first_2 == semantic->groups.front().first_2);
      CHECK(g.vertices[static_cast<std::size_t>(walked->groups.front().target)] ==
            semantic->groups.front().target);
    }
  }
}

TEST_CASE("all twelve statistics cells occur among applicable vertices up to lambda1 = 5") {
  std::set<std::pair<int, int>> cells;
  for (const Tableau& t : c2test::tableaux_up_to(5)) {
    if (epsilon(t, Color::One) == 0 || epsilon(t, Color::Two) == 0) continue;
    const AbcdStats s = abcd(t);
    const int col = s.a < s.b ? 0 : (s.a == s.b ? 1 : (s.a == s.b + 1 ? 2 : 3));
    const int row = s.c < s.d ? 0 : (s.c == s.d ? 1 : 2);
    cells.insert({row, col});
  }
  CHECK(cells.size() == 12);
  // the scarcest cell needs five one-cell columns: 2 -2 -2 -2 -1 in shape (5,0)
  const AbcdStats rare = abcd(T("2 -2 -2 -2 -1"));
  CHECK(rare.c > rare.d);
  CHECK(rare.a > rare.b + 1);
}

TEST_CASE("verify_crystal summarizes a shape") {
  const CrystalReport path = verify_crystal(generate({1, 0}));
  CHECK(path.applicable_e == 0);
  CHECK(path.applicable_f == 0);
  CHECK(path.passed());

  const CrystalReport r21 = verify_crystal(generate({2, 1}));
  CHECK(r21.passed());
  CHECK(r21.applicable_e == 3);
  CHECK(r21.applicable_e == r21.applicable_f);
  CHECK(r21.e_counts == r21.f_counts);
  CHECK(r21.e_counts.of(2) == 2);
  CHECK(r21.e_counts.of(7) == 1);  // the sink has statistics (1,1,0,0)

  // degree 5 needs three columns of width one; it first occurs in shape (3,0)
  const CrystalReport r30 = verify_crystal(generate({3, 0}));
  CHECK(r30.passed());
  CHECK(r30.e_counts.of(5) == 1);

  const CrystalReport r31 = verify_crystal(generate({3, 1}));
  CHECK(r31.passed());
  CHECK(r31.applicable_e == 10);
  CHECK(r31.e_counts.of(2) == 6);
  CHECK(r31.e_counts.of(4) == 2);
  CHECK(r31.e_counts.of(5) == 0);
  CHECK(r31.e_counts.of(7) == 2);
}
