#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertutte/conjecture.hpp"
#include "hypertutte/delta.hpp"
#include "hypertutte/errors.hpp"
#include "support.hpp"

using namespace hypertutte;
using testing::fixture;
using testing::fixture_path;

namespace {

PolymatroidBases triangle() { return load_polymatroid_file(fixture_path("delta_fig.matroid")); }

PolymatroidBases fig6() { return PolymatroidBases::from_graph(load_graph_file(fixture_path("fig6.graph"))); }

ActivityAssignment fig6_assignment() {
  const PolymatroidBases p = fig6();
  return fixed_tree_order_activities(p, load_tree_orders_file(fixture_path("fig6.orders"), p));
}

std::map<std::string, std::string> nontrivial_by_base(const PolymatroidBases& p, const ActivityAssignment& a) {
  std::map<std::string, std::string> out;
  for (const BasisActivity& b : a)
    out[p.describe(b.basis)] = p.describe(b.nontrivial.internal | b.nontrivial.external);
  return out;
}

std::vector<int> names(const PolymatroidBases& p, const std::string& s) {
  std::vector<int> out;
  for (char c : s) out.push_back(p.element(std::string(1, c)));
  return out;
}

// Random polymatroids: hypertrees of small random hypergraphs, or cycle
// matroids of small random graphs.
PolymatroidBases random_polymatroid(std::uint64_t seed) {
  Rng rng(seed);
  if (rng.uniform(0, 1) == 0) return PolymatroidBases::from_hypertrees(random_instance({3, 4, 8, 200}, seed));
  while (true) {
    const int n = rng.uniform(2, 4);
    const int m = rng.uniform(n - 1, 4);
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < m; ++k) {
      const int a = rng.uniform(0, n - 1);
      int b = rng.uniform(0, n - 2);
      if (b >= a) ++b;
      edges.emplace_back(a, b);
    }
    const OrdinaryGraph og = testing::make_graph(n, edges);
    if (is_connected(og)) return PolymatroidBases::from_graph(og);
  }
}

}  // namespace

TEST_CASE("polymatroid validation") {
  CHECK_NOTHROW(triangle());
  CHECK_THROWS_AS(PolymatroidBases({"a"}, BaseFamily()), ValidationError);
  CHECK_THROWS_AS(PolymatroidBases({"a", "b"}, BaseFamily(std::vector<IntVector>{{1, 0, 0}})), ValidationError);
  CHECK_THROWS_AS(PolymatroidBases({"a", "b"}, BaseFamily({{1, 0}, {1, 1}})), ValidationError);
  CHECK_THROWS_AS(PolymatroidBases({"a", "b"}, BaseFamily(std::vector<IntVector>{{2, -1}})), ValidationError);
  CHECK_THROWS_AS(PolymatroidBases({"a", "a"}, BaseFamily(std::vector<IntVector>{{1, 0}})), ValidationError);
  // no exchange between the two
  CHECK_THROWS_AS(PolymatroidBases({"a", "b", "c", "d"}, BaseFamily({{1, 0, 1, 0}, {0, 1, 0, 1}})), ValidationError);
  CHECK_THROWS_AS(load_polymatroid("ground: [a, b]\nbases: [[1, 0]]\nextra: 2\n"), ParseError);
  CHECK_THROWS_AS(load_polymatroid("ground: [a, b]\n"), ParseError);
}

TEST_CASE("polymatroid accessors") {
  const PolymatroidBases p = triangle();
  CHECK(p.size() == 3);
  CHECK(p.element("c") == 2);
  CHECK(p.element("z") == -1);
  CHECK(p.rank_cap(0) == 1);
  CHECK(p.describe(IntVector{0, 1, 1}) == "{b, c}");
  CHECK(p.describe(IndexSet{0, 2}) == "ac");
  const PolymatroidBases h = PolymatroidBases::from_hypertrees(fixture("fig5.hg"));
  CHECK(h.ground() == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(h.rank_cap(2) == 2);
  CHECK(h.describe(IntVector{0, 0, 2, 0}) == "(0,0,2,0)");
}

TEST_CASE("decision tree validation") {
  const PolymatroidBases p = triangle();
  CHECK_NOTHROW(load_decision_tree_file(fixture_path("delta_fig.tree"), p));
  // repeated label on a branch
  CHECK_THROWS_AS(load_decision_tree("{label: a, children: [{label: a, children: [{label: c}, {label: c}]}, "
                                     "{label: c, children: [{label: b}, {label: b}]}]}",
                                     p),
                  ValidationError);
  // missing last level
  CHECK_THROWS_AS(load_decision_tree("{label: a, children: [{label: b}, {label: c}]}", p), ValidationError);
  // wrong arity
  CHECK_THROWS_AS(load_decision_tree("{label: a, children: [{label: b, children: [{label: c}]}, "
                                     "{label: c, children: [{label: b}, {label: b}]}]}",
                                     p),
                  ValidationError);
  // children below the last level
  CHECK_THROWS_AS(load_decision_tree("{label: a, children: [{label: b, children: [{label: c, children: [{label: a}]}, "
                                     "{label: c}]}, {label: c, children: [{label: b}, {label: b}]}]}",
                                     p),
                  ValidationError);
  CHECK_THROWS_AS(load_decision_tree("{label: q}", p), ValidationError);
  CHECK_THROWS_AS(load_decision_tree("[1, 2]", p), ParseError);
}

TEST_CASE("decision tree render round-trips") {
  const PolymatroidBases p = triangle();
  const DecisionTree t = load_decision_tree_file(fixture_path("delta_fig.tree"), p);
  CHECK(load_decision_tree(render(t, p), p) == t);
}

TEST_CASE("orders of the example decision tree") {
  const PolymatroidBases p = triangle();
  const DecisionTree t = load_decision_tree_file(fixture_path("delta_fig.tree"), p);
  CHECK(order_of_basis(t, {0, 1, 1}).sequence() == names(p, "abc"));
  CHECK(order_of_basis(t, {1, 0, 1}).sequence() == names(p, "acb"));
  CHECK(order_of_basis(t, {1, 1, 0}).sequence() == names(p, "acb"));
  CHECK_THROWS_AS(order_of_basis(t, {2, 0, 0}), BasisOutOfRange);
  const std::map<std::string, std::string> expected = {{"{b, c}", "bc"}, {"{a, c}", "b"}, {"{a, b}", "b"}};
  CHECK(nontrivial_by_base(p, delta_assignment(t, p)) == expected);
}

TEST_CASE("one-element ground set") {
  const PolymatroidBases p({"a"}, BaseFamily(std::vector<IntVector>{{2}}));
  const DecisionTree t = load_decision_tree("{label: a}", p);
  CHECK(order_of_basis(t, {2}).sequence() == std::vector<int>{0});
  const ActivityAssignment a = delta_assignment(t, p);
  REQUIRE(a.size() == 1);
  CHECK(a[0].nontrivial.internal.empty());
  CHECK(a[0].nontrivial.external.empty());
  CHECK(obstruction_check(a, 1).exempt == 0);
}

TEST_CASE("the branch maximum is both active") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PolymatroidBases p = random_polymatroid(seed);
    Rng rng(seed);
    const DecisionTree t = random_decision_tree(p, rng);
    for (const BasisActivity& b : delta_assignment(t, p)) {
      const int last = b.order.sequence().back();
      CHECK(b.plain.internal.contains(last));
      CHECK(b.plain.external.contains(last));
      CHECK((b.nontrivial.internal - b.plain.internal).empty());
      CHECK((b.nontrivial.external - b.plain.external).empty());
    }
  }
}

TEST_CASE("nontrivial filter") {
  const PolymatroidBases p = triangle();
  ActivityRecord all{IndexSet{0, 1, 2}, IndexSet{0, 1, 2}};
  const ActivityRecord r = nontrivial(p.bases(), {0, 1, 1}, all);
  CHECK(r.internal == IndexSet({1, 2}));
  CHECK(r.external == IndexSet{0});
  // a coloop is never nontrivially active
  const PolymatroidBases q({"a", "b", "c"}, BaseFamily({{1, 1, 0}, {1, 0, 1}}));
  for (const IntVector& b : q.bases().members()) {
    const ActivityRecord n = nontrivial(q.bases(), b, all);
    CHECK_FALSE(n.internal.contains(0));
    CHECK_FALSE(n.external.contains(0));
  }
}

TEST_CASE("fig5 embedding assignment") {
  const RibbonGraph g = fixture("fig5.hg");
  const PolymatroidBases p = PolymatroidBases::from_hypertrees(g);
  const ActivityAssignment a = embedding_assignment(g);
  const std::map<std::string, std::string> expected = {
      {"(0,0,1,1)", "abc"}, {"(0,0,2,0)", "ab"}, {"(0,1,0,1)", "a"},
      {"(0,1,1,0)", "ac"},  {"(1,0,0,1)", "ad"}, {"(1,0,1,0)", "a"},
  };
  CHECK(nontrivial_by_base(p, a) == expected);
  std::vector<std::vector<int>> orders;
  for (const BasisActivity& b : a) orders.push_back(b.order.sequence());
  CHECK(orders == std::vector<std::vector<int>>{names(p, "abcd"), names(p, "abcd"), names(p, "abcd"),
                                                names(p, "abcd"), names(p, "adcb"), names(p, "adbc")});
  const ObstructionVerdict v = obstruction_check(a, p.size());
  CHECK(v.no_exempt());
  CHECK(v.active_somewhere == IndexSet::full(4));
  CHECK(assignment_polynomial(a) == tutte_embedding(g));
}

TEST_CASE("fig6 tree order assignment") {
  const PolymatroidBases p = fig6();
  const ActivityAssignment a = fig6_assignment();
  const std::map<std::string, std::string> expected = {
      {"{c, d}", "ab"}, {"{b, d}", "a"}, {"{b, c}", "ac"}, {"{a, c}", "a"}, {"{a, d}", "ad"}};
  CHECK(nontrivial_by_base(p, a) == expected);
  CHECK(obstruction_check(a, p.size()).no_exempt());

  // every 0/1 vector and the tree whose interval holds it, columns a b c d
  const std::map<std::string, std::string> table = {
      {"0000", "ad"}, {"0001", "ad"}, {"0010", "ac"}, {"0011", "cd"}, {"0100", "bc"}, {"0101", "bd"},
      {"0110", "bc"}, {"0111", "cd"}, {"1000", "ad"}, {"1001", "ad"}, {"1010", "ac"}, {"1011", "cd"},
      {"1100", "bc"}, {"1101", "bd"}, {"1110", "bc"}, {"1111", "cd"},
  };
  const auto intervals = assignment_intervals(a);
  for (const auto& [bits, tree] : table) {
    CAPTURE(bits);
    IntVector c;
    for (char ch : bits) c.push_back(ch - '0');
    std::vector<std::string> holders;
    for (std::size_t k = 0; k < a.size(); ++k) {
      std::string name;
      for (int e = 0; e < 4; ++e)
        if (a[k].basis[e]) name += p.ground()[e];
      if (interval_contains(intervals[k], c)) holders.push_back(name);
    }
    CHECK(holders == std::vector<std::string>{tree});
  }
  const PartitionReport r = verify_partition(p.bases(), intervals, LatticeBox::cube(4, 0, 1));
  CHECK(r.passed());
  CHECK(r.points == 16);
  CHECK(verify_partition(p.bases(), intervals, LatticeBox::cube(4, -2, 3)).passed());
}

TEST_CASE("tree orders file errors") {
  const PolymatroidBases p = fig6();
  CHECK_THROWS_AS(load_tree_orders("- {tree: [a, b], order: [a, b, c, d]}\n", p), ValidationError);
  CHECK_THROWS_AS(load_tree_orders("- {tree: [c, d], order: [a, b, c]}\n", p), ValidationError);
  CHECK_THROWS_AS(load_tree_orders("- {tree: [c, q], order: [a, b, c, d]}\n", p), ValidationError);
  CHECK_THROWS_AS(fixed_tree_order_activities(p, load_tree_orders("- {tree: [c, d], order: [a, b, c, d]}\n", p)),
                  ValidationError);
}

TEST_CASE("single tree graph") {
  const PolymatroidBases p = PolymatroidBases::from_graph(testing::make_graph(3, {{0, 1}, {1, 2}}));
  std::map<IntVector, HyperedgeOrder> orders{{{1, 1}, HyperedgeOrder::identity(2)}};
  const ActivityAssignment a = fixed_tree_order_activities(p, orders);
  REQUIRE(a.size() == 1);
  CHECK(a[0].nontrivial.internal.empty());
  CHECK(a[0].nontrivial.external.empty());
  CHECK(obstruction_check(a, 2).exempt == 0);
}

TEST_CASE("example decision tree partitions the lattice") {
  const PolymatroidBases p = triangle();
  const DecisionTree t = load_decision_tree_file(fixture_path("delta_fig.tree"), p);
  const PartitionReport r = delta_crapo_verify(t, p);
  CHECK(r.passed());
  CHECK(r.points == 216);
  const ObstructionVerdict v = obstruction_check(delta_assignment(t, p), p.size());
  CHECK(v.exempt == 0);
}

TEST_CASE("swapped free sets break the decision tree partition") {
  const PolymatroidBases p = triangle();
  const DecisionTree t = load_decision_tree_file(fixture_path("delta_fig.tree"), p);
  auto intervals = assignment_intervals(delta_assignment(t, p));
  std::swap(intervals[0].internal_free, intervals[0].external_free);
  CHECK_FALSE(verify_partition(p.bases(), intervals, LatticeBox::around(p.bases(), 2, 2)).passed());
}

TEST_CASE("random decision trees exempt their root and partition the lattice") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CAPTURE(seed);
    const PolymatroidBases p = random_polymatroid(seed);
    Rng rng(Rng::derive(seed, 1));
    const DecisionTree t = random_decision_tree(p, rng);
    const ActivityAssignment a = delta_assignment(t, p);
    const ObstructionVerdict v = obstruction_check(a, p.size());
    CHECK_FALSE(v.active_somewhere.contains(t.root().label));
    REQUIRE(v.exempt.has_value());
    CHECK(delta_crapo_verify(t, p).passed());
    // the generating function does not depend on the tree
    CHECK(assignment_polynomial(a) == tutte_from_order(p.bases(), HyperedgeOrder::identity(p.size())));
  }
}

TEST_CASE("search recovers a planted decision tree") {
  const PolymatroidBases p = triangle();
  const DecisionTree t = load_decision_tree_file(fixture_path("delta_fig.tree"), p);
  const ActivityAssignment target = delta_assignment(t, p);
  const auto found = exhaustive_delta_search(p, target);
  REQUIRE(found.has_value());
  const ActivityAssignment again = delta_assignment(*found, p);
  REQUIRE(again.size() == target.size());
  for (std::size_t k = 0; k < again.size(); ++k) {
    CHECK(again[k].plain == target[k].plain);
    CHECK(again[k].nontrivial == target[k].nontrivial);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CAPTURE(seed);
    const PolymatroidBases q = random_polymatroid(seed + 500);
    Rng rng(seed);
    const ActivityAssignment planted = delta_assignment(random_decision_tree(q, rng), q);
    const auto hit = exhaustive_delta_search(q, planted);
    REQUIRE(hit.has_value());
    const ActivityAssignment got = delta_assignment(*hit, q);
    for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k].plain == planted[k].plain);
  }
}

TEST_CASE("no decision tree gives the counterexample activities") {
  const RibbonGraph g = fixture("fig5.hg");
  CHECK_FALSE(exhaustive_delta_search(PolymatroidBases::from_hypertrees(g), embedding_assignment(g)).has_value());
  CHECK_FALSE(exhaustive_delta_search(fig6(), fig6_assignment()).has_value());
}

TEST_CASE("search refuses oversized inputs") {
  const PolymatroidBases wide = PolymatroidBases::from_graph(testing::make_graph(
      3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {1, 2}}));
  const HyperedgeOrder id = HyperedgeOrder::identity(wide.size());
  const ActivityAssignment target = assign(wide.bases(), [&](const IntVector&) { return id; }, ActivityRule::max);
  CHECK_THROWS_AS(exhaustive_delta_search(wide, target), SearchSpaceTooLarge);
  const PolymatroidBases tall({"a", "b"}, BaseFamily({{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}}));
  const ActivityAssignment t2 =
      assign(tall.bases(), [](const IntVector&) { return HyperedgeOrder::identity(2); }, ActivityRule::max);
  CHECK_THROWS_AS(exhaustive_delta_search(tall, t2), SearchSpaceTooLarge);
}
