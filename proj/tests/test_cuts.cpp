#include "doctest.h"
#include "support.hpp"

using namespace qwc;
using namespace qwc::testing;

namespace {

std::vector<std::string> formatted(const Quiver& q, const std::vector<Cut>& cuts) {
  std::vector<std::string> out;
  for (const auto& c : cuts) out.push_back(format_cut(q, c));
  return out;
}

LabeledQuiverWithCycles tensor_of(const char* left, const char* right) {
  return tensor_qwc(dynkin_quiver(parse_dynkin_spec(left)), dynkin_quiver(parse_dynkin_spec(right)));
}

}  // namespace

TEST_CASE("gradings") {
  const auto q = fixture("b2xb2_split.json").qwc;
  const auto& quiver = q.quiver();
  const auto de = cut_of(quiver, {"d", "e"});
  const auto g = grading_from_cut(q, de);
  for (ArrowIndex a = 0; a < quiver.arrow_count(); ++a) {
    const auto id = quiver.arrow(a).id.str();
    CHECK(g.degree[a] == (id == "d" || id == "e" ? 1 : 0));
  }
  CHECK(walk_degree(g, Walk{}) == 0);
  CHECK(walk_degree(g, Walk{{{quiver.arrow_index(ArrowId("d")), -1}}}) == -1);
  for (const auto& c : q.cycles()) {
    Walk w;
    for (auto a : c.arrows) w.steps.push_back({a, 1});
    CHECK(walk_degree(g, w) == 1);
  }

  const auto none = grading_from_cut(q, Cut{});
  CHECK(std::all_of(none.degree.begin(), none.degree.end(), [](int d) { return d == 0; }));
  std::vector<ArrowIndex> all(quiver.arrow_count());
  std::iota(all.begin(), all.end(), 0);
  const auto full = grading_from_cut(q, Cut(all));
  Walk path{{{quiver.arrow_index(ArrowId("a")), 1}, {quiver.arrow_index(ArrowId("c")), 1}}};
  CHECK(walk_degree(full, path) == 2);
}

TEST_CASE("property: walk degree is linear in the signed arrow counts") {
  std::mt19937 rng(3);
  const auto q = fixture("a3xb2.json").qwc;
  const auto& quiver = q.quiver();
  for (const auto& c : enumerate_cuts(q)) {
    const auto g = grading_from_cut(q, c);
    for (int k = 0; k < 20; ++k) {
      Walk w;
      VertexIndex v = rng() % quiver.vertex_count();
      for (int s = 0; s < 8; ++s) {
        std::vector<Step> options;
        for (auto a : quiver.outgoing(v)) options.push_back({a, 1});
        for (auto a : quiver.incoming(v)) options.push_back({a, -1});
        const auto st = options[rng() % options.size()];
        w.steps.push_back(st);
        v = step_end(quiver, st);
      }
      const auto counts = signed_arrow_counts(quiver, w);
      long long expected = 0;
      for (ArrowIndex a = 0; a < quiver.arrow_count(); ++a) expected += counts[a] * g.degree[a];
      CHECK(walk_degree(g, w) == expected);
      CHECK(walk_degree(g, w.inverse()) == -expected);
    }
  }
}

TEST_CASE("is_cut") {
  const auto q = fixture("b2xb2_split.json").qwc;
  CHECK(is_cut(q, cut_of(q.quiver(), {"d", "e"})));
  CHECK(!is_cut(q, cut_of(q.quiver(), {"a", "d", "e"})));
  CHECK(!is_cut(q, Cut{}));
  CHECK(is_cut(fixture("minimal.json").qwc, Cut{}));
  CHECK_THROWS_AS(cut_of(q.quiver(), {"zz"}), PreconditionError);
}

TEST_CASE("enumerate_cuts on the worked examples") {
  const auto b = fixture("b2xb2_split.json").qwc;
  const auto cuts = enumerate_cuts(b);
  CHECK(formatted(b.quiver(), cuts) ==
        std::vector<std::string>{"{a,b,e}", "{a,b,g,h}", "{a,f,h}", "{b,c,g}", "{c,f}", "{d,e}", "{d,g,h}"});
  CHECK(cuts == brute_force_cuts(b));

  const auto a = fixture("a3xb2.json").qwc;
  CHECK(enumerate_cuts(a).size() == 13);
  CHECK(enumerate_cuts(a) == brute_force_cuts(a));

  const auto empty = enumerate_cuts(fixture("circle.json").qwc);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());
}

TEST_CASE("parallel and serial enumeration agree") {
  for (auto [l, r] : {std::pair{"A3:1<2>3", "B2"}, {"D4", "A3"}, {"E6", "A2"}, {"F4", "G2"}, {"C3", "B3"}}) {
    const auto t = tensor_of(l, r).qwc;
    const auto par = enumerate_cuts(t);
    CHECK(par == enumerate_cuts_serial(t));
    CHECK(std::is_sorted(par.begin(), par.end()));
    for (const auto& c : par) CHECK(is_cut(t, c));
  }
}

TEST_CASE("property: enumeration matches the subset filter on random quivers") {
  std::mt19937 rng(5);
  int nontrivial = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto q = random_quiver_with_cycles(rng, 3 + trial % 4, 5 + trial % 7, 1 + trial % 5);
    const auto fast = enumerate_cuts(q);
    CHECK(fast == brute_force_cuts(q));
    CHECK(fast == enumerate_cuts_serial(q));
    nontrivial += fast.size() > 1;
  }
  CHECK(nontrivial > 20);
}

TEST_CASE("repeated arrows in one cycle are never cut arrows") {
  // 1 -a-> 2 -b-> 1 and the cycle a b a b: each arrow occurs twice
  Quiver q({VertexId("1"), VertexId("2")},
           {{ArrowId("a"), VertexId("1"), VertexId("2")}, {ArrowId("b"), VertexId("2"), VertexId("1")}});
  const std::vector<ArrowId> abab{ArrowId("a"), ArrowId("b"), ArrowId("a"), ArrowId("b")};
  QuiverWithCycles qc(q, {canonicalize_cycle(q, std::span<const ArrowId>(abab))});
  CHECK(enumerate_cuts(qc).empty());
  CHECK(brute_force_cuts(qc).empty());
}

TEST_CASE("covered and enough cuts") {
  CHECK(is_covered(fixture("b2xb2_split.json").qwc));
  CHECK(has_enough_cuts(fixture("b2xb2_split.json").qwc));
  CHECK(is_covered(fixture("minimal.json").qwc));
  CHECK(has_enough_cuts(fixture("minimal.json").qwc));
  const auto bridged = fixture("bridged_triangles.json").qwc;
  CHECK(!is_covered(bridged));
  CHECK(uncovered_arrows(bridged) == std::vector<ArrowIndex>{bridged.quiver().arrow_index(ArrowId("g"))});
  CHECK(!has_enough_cuts(bridged));
  CHECK(is_covered(tensor_of("E6", "A2").qwc));
}

TEST_CASE("compatibility") {
  const auto q = fixture("b2xb2_split.json").qwc;
  const auto de = cut_of(q.quiver(), {"d", "e"});
  const auto cf = cut_of(q.quiver(), {"c", "f"});
  CHECK(are_compatible(q, de, de));
  CHECK(are_compatible(q, de, cf));
  CHECK(is_fully_compatible(q));
  CHECK(basis_degrees(q, de) == basis_degrees(q, cf));
  CHECK_THROWS_AS(are_compatible(q, de, cut_of(q.quiver(), {"a"})), PreconditionError);
  CHECK(is_fully_compatible(fixture("circle.json").qwc));
}

TEST_CASE("compatibility fails off the simply connected world") {
  // Two triangles sharing vertex 1 plus a return arrow 3 -> 4 make a loop
  // in the canvas that cuts can grade differently.
  QuiverDescription d;
  for (auto v : {"1", "2", "3", "4", "5"}) d.vertices.emplace_back(v);
  auto arrow = [&](const char* id, const char* s, const char* t) {
    d.arrows.push_back({ArrowId(id), VertexId(s), VertexId(t), std::nullopt});
  };
  arrow("a", "1", "2");
  arrow("b", "2", "3");
  arrow("c", "3", "1");
  arrow("d", "1", "4");
  arrow("e", "4", "5");
  arrow("f", "5", "1");
  arrow("x", "3", "4");
  d.cycles = {{{ArrowId("a"), ArrowId("b"), ArrowId("c")}, std::nullopt},
              {{ArrowId("d"), ArrowId("e"), ArrowId("f")}, std::nullopt}};
  const auto q = QuiverWithCycles::from_description(d);
  CHECK(!is_fully_compatible(q));
  const auto verdict = is_simply_connected(q);
  CHECK(verdict.status == Verdict::No);
}

TEST_CASE("truncated quiver") {
  const auto q = fixture("b2xb2_split.json").qwc;
  const auto t = truncated_quiver(q, cut_of(q.quiver(), {"d", "e"}));
  std::vector<std::string> ids;
  for (const auto& a : t.arrows()) ids.push_back(a.id.str());
  CHECK(ids == std::vector<std::string>{"a", "b", "c", "f", "g", "h"});
  CHECK(t.vertex_count() == 5);
  CHECK(dfs_acyclic(t));
  CHECK(is_acyclic(t));

  const auto circle = fixture("circle.json").qwc;
  CHECK(truncated_quiver(circle, Cut{}) == circle.quiver());
}

TEST_CASE("truncated presentation") {
  const auto q = fixture("b2xb2_split.json").qwc;
  const auto p = truncated_presentation(q, cut_of(q.quiver(), {"d", "e"}));
  REQUIRE(p.relations.size() == 2);
  const auto& d = p.relations.at(ArrowId("d"));
  REQUIRE(d.size() == 2);
  CHECK(d[0] == RelationTerm{1, {ArrowId("a"), ArrowId("c")}});
  CHECK(d[1] == RelationTerm{-1, {ArrowId("b"), ArrowId("f")}});
  for (const auto& [alpha, terms] : p.relations) {
    const auto a = q.quiver().arrow_index(alpha);
    CHECK(terms.size() == q.cycles_through(a).size());
    for (const auto& t : terms) {
      // each path runs from t(alpha) back to s(alpha)
      CHECK(q.quiver().arrow(q.quiver().arrow_index(t.path.front())).source == q.quiver().arrow(a).target);
      CHECK(q.quiver().arrow(q.quiver().arrow_index(t.path.back())).target == q.quiver().arrow(a).source);
    }
  }
  const auto empty = truncated_presentation(fixture("minimal.json").qwc, Cut{});
  CHECK(empty.relations.empty());
}

// The equivalence needs coveredness: an arrow in no cycle survives every
// truncation without ever joining a cut (bridged_triangles, circle).
TEST_CASE("acyclic truncation iff enough cuts on covered, fully compatible fixtures") {
  for (auto name : {"b2xb2_split.json", "a3xb2.json", "bridged_triangles.json", "minimal.json", "circle.json"}) {
    const auto q = fixture(name).qwc;
    const auto cuts = enumerate_cuts(q);
    REQUIRE(!cuts.empty());
    if (!is_covered(q) || !is_fully_compatible(q, cuts)) continue;
    CHECK(is_acyclic(truncated_quiver(q, cuts.front())) == has_enough_cuts(q, cuts));
    if (has_enough_cuts(q, cuts)) {
      for (const auto& c : cuts) CHECK(dfs_acyclic(truncated_quiver(q, c)));
    }
  }
}
