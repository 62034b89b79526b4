#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>

#include "hypertutte/conjecture.hpp"
#include "hypertutte/errors.hpp"
#include "hypertutte/jaeger.hpp"
#include "hypertutte/tutte.hpp"
#include "support.hpp"

using namespace hypertutte;
using testing::fixture;

namespace {

const char* kAllFixtures[] = {"fig1.hg", "fig2.hg", "fig5.hg", "single_edge.hg"};
const char* kFig2 = "x^4 + 4x^3y - x^3 + 6x^2y^2 - 3x^2y + 4xy^3 - 4xy^2 + y^4 - 2y^3 + y^2";

const Polynomial x = Polynomial::x();
const Polynomial y = Polynomial::y();

// Counts lattice points by their distances to the family, straight from the
// definitions, over the box the bounds force.
CoefficientTable brute_corank(const HypertreeSet& all, int imax, int jmax) {
  CoefficientTable out(imax, jmax);
  const int n = all.dimension();
  IntVector lo = all.lower(), hi = all.upper();
  for (int e = 0; e < n; ++e) {
    lo[e] -= imax;
    hi[e] += jmax;
  }
  IntVector c = lo;
  while (true) {
    int less = INT_MAX, greater = INT_MAX;
    for (const IntVector& h : all.members()) {
      int l = 0, g = 0;
      for (int e = 0; e < n; ++e) {
        l += std::max(0, c[e] - h[e]);
        g += std::max(0, h[e] - c[e]);
      }
      less = std::min(less, l);
      greater = std::min(greater, g);
    }
    if (greater <= imax && less <= jmax) ++out.at(greater, less);
    int e = n - 1;
    for (; e >= 0 && c[e] == hi[e]; --e) c[e] = lo[e];
    if (e < 0) break;
    ++c[e];
  }
  return out;
}

}  // namespace

TEST_CASE("fig2 embedding polynomial") {
  const RibbonGraph g = fixture("fig2.hg");
  const Polynomial t = tutte_embedding(g);
  CHECK(t.to_string() == kFig2);
  CHECK(t.evaluate(1, 1) == 7);
  CHECK(interior(t) == parse_polynomial("x^4 + 3x^3 + 3x^2"));
  CHECK(exterior(t) == parse_polynomial("y^4 + 2y^3 + 3y^2 + y"));
  CHECK(interior(g) == interior(t));
  CHECK(exterior(g) == exterior(t));
}

TEST_CASE("fig2 monomials per hypertree") {
  const RibbonGraph g = fixture("fig2.hg");
  const HypertreeSet all = enumerate_hypertrees(g);
  CHECK(activity_monomial(embedding_activities(g, all, {0, 0, 1, 1})) == y * y * (x + y - 1).pow(2));
  CHECK(activity_monomial(embedding_activities(g, all, {1, 1, 0, 0})) == x * x * (x + y - 1));
}

TEST_CASE("single edge") {
  const RibbonGraph g = fixture("single_edge.hg");
  CHECK(tutte_embedding(g) == x + y - 1);
  CHECK(tutte_from_order(g, HyperedgeOrder::identity(1)) == x + y - 1);
  CHECK(interior(g) == x);
  CHECK(exterior(g) == y);
}

TEST_CASE("value at (1,1) counts hypertrees") {
  for (const char* name : kAllFixtures) {
    const RibbonGraph g = fixture(name);
    CHECK(tutte_embedding(g).evaluate(1, 1) == static_cast<std::int64_t>(enumerate_hypertrees(g).size()));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RibbonGraph g = random_instance({}, seed);
    CHECK(tutte_embedding(g).evaluate(1, 1) == static_cast<std::int64_t>(enumerate_hypertrees(g).size()));
  }
}

TEST_CASE("every fixed order gives the embedding polynomial") {
  for (const char* name : kAllFixtures) {
    CAPTURE(name);
    const RibbonGraph g = fixture(name);
    const HypertreeSet all = enumerate_hypertrees(g);
    const Polynomial t = tutte_embedding(g, all);
    std::vector<int> seq(g.emerald_count());
    std::iota(seq.begin(), seq.end(), 0);
    int orders = 0;
    Rng rng(3);
    if (seq.size() <= 5) {
      do {
        CHECK(tutte_from_order(all, HyperedgeOrder(seq)) == t);
        ++orders;
      } while (std::next_permutation(seq.begin(), seq.end()));
    } else {
      for (; orders < 20; ++orders) {
        rng.shuffle(seq);
        CHECK(tutte_from_order(all, HyperedgeOrder(seq)) == t);
      }
    }
    if (std::string(name) == "fig2.hg") CHECK(orders == 24);
  }
}

TEST_CASE("ribbon structure and basis do not matter") {
  for (const char* name : kAllFixtures) {
    CAPTURE(name);
    const RibbonGraph g = fixture(name);
    const Polynomial t = tutte_embedding(g);
    Rng rng(2024);
    for (int k = 0; k < 10; ++k) CHECK(tutte_embedding(perturb_embedding(g, rng)) == t);
  }
}

TEST_CASE("corank-nullity tables") {
  const RibbonGraph g = fixture("fig2.hg");
  const HypertreeSet all = enumerate_hypertrees(g);
  const CoefficientTable table = corank_nullity(all, 4, 4);
  CHECK(table.at(0, 0) == 7);
  CHECK(table.at(0, 1) == 17);
  CHECK(table.at(0, 4) == 81);
  CHECK(table == brute_corank(all, 4, 4));
  CHECK(corank_nullity(all, 4, 4, kDefaultPointBudget, 4) == table);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) CHECK(table.at(i, j) >= 0);

  const HypertreeSet fig5 = enumerate_hypertrees(fixture("fig5.hg"));
  CHECK(corank_nullity(fig5, 3, 2) == brute_corank(fig5, 3, 2));
}

TEST_CASE("single edge corank-nullity") {
  const HypertreeSet all = enumerate_hypertrees(fixture("single_edge.hg"));
  const CoefficientTable table = corank_nullity(all, 3, 3);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) CHECK(table.at(i, j) == (i == 0 || j == 0 ? 1 : 0));
}

TEST_CASE("oversized box is refused") {
  const HypertreeSet all = enumerate_hypertrees(fixture("fig2.hg"));
  CHECK_THROWS_AS(corank_nullity(all, 3, 3, 100), BoundsTooLarge);
  CHECK_THROWS_AS(corank_nullity(all, 200, 200), BoundsTooLarge);
}

TEST_CASE("series identity") {
  for (const char* name : kAllFixtures) {
    CAPTURE(name);
    CHECK(series_identity_check(fixture(name), 3, 3).passed());
  }
  const SeriesReport r = series_identity_check(fixture("fig2.hg"), 4, 4, 2);
  CHECK(r.passed());
  CHECK(r.expected == r.counted);
  const SeriesReport single = series_identity_check(fixture("single_edge.hg"), 3, 3);
  CHECK(single.counted.at(3, 0) == 1);
  CHECK(single.counted.at(0, 3) == 1);
  CHECK(single.expected.at(2, 2) == 0);
}

TEST_CASE("a corrupted activity breaks the series identity") {
  const RibbonGraph g = fixture("fig2.hg");
  const HypertreeSet all = enumerate_hypertrees(g);
  const Polynomial bad = tutte_from_activities(all, [&](const Hypertree& h) {
    ActivityRecord r = embedding_activities(g, all, h);
    if (h == IntVector{1, 1, 0, 0}) std::swap(r.internal, r.external);
    return r;
  });
  CHECK_FALSE(bad == tutte_embedding(g, all));
  const SeriesReport r = series_identity_check(bad, all, 4, 4);
  REQUIRE_FALSE(r.passed());
  const SeriesMismatch& m = *r.mismatch;
  CHECK(r.expected.at(m.i, m.j) == m.from_polynomial);
  CHECK(r.counted.at(m.i, m.j) == m.from_lattice);
  CHECK(m.from_polynomial != m.from_lattice);
}

TEST_CASE("classical Tutte polynomial") {
  using testing::make_graph;
  CHECK(classical_tutte(make_graph(3, {{0, 1}, {1, 2}, {2, 0}})) == x * x + x + y);
  CHECK(classical_tutte(make_graph(2, {{0, 1}})) == x);
  CHECK(classical_tutte(make_graph(1, {{0, 0}})) == y);
  CHECK(classical_tutte(make_graph(2, {{0, 1}, {0, 1}})) == x + y);
  CHECK(classical_tutte(make_graph(1, {})) == Polynomial(1));
  // K4
  CHECK(classical_tutte(make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) ==
        parse_polynomial("x^3 + 3x^2 + 4xy + 2x + y^3 + 3y^2 + 2y"));
  CHECK(classical_tutte(load_graph_file(testing::fixture_path("fig6.graph"))) ==
        parse_polynomial("x^2 + xy + x + y^2 + y"));
  CHECK_THROWS_AS(classical_tutte(make_graph(3, {{0, 1}})), Disconnected);
  CHECK_THROWS_AS(to_ribbon_graph(make_graph(3, {{0, 1}})), Disconnected);
}

TEST_CASE("bridge to the classical polynomial") {
  using testing::make_graph;
  const std::vector<OrdinaryGraph> graphs = {
      make_graph(3, {{0, 1}, {1, 2}, {2, 0}}),
      make_graph(2, {{0, 1}, {0, 1}}),
      make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
      load_graph_file(testing::fixture_path("fig6.graph")),
  };
  for (const OrdinaryGraph& og : graphs) {
    const BridgeReport r = graph_tutte_bridge(og);
    CHECK(r.forms.size() == 4);
    CHECK(r.classical == classical_tutte(og));
    CHECK(r.nullity == og.edge_count() - og.vertex_count() + 1);
    CHECK(r.rank == og.vertex_count() - 1);
    REQUIRE(r.winner().has_value());
    CHECK(r.winner()->rfind("calT = ", 0) == 0);
    CHECK(r.winner()->find("(x+y-1)/y, (x+y-1)/x") != std::string::npos);
    int holding = 0;
    for (const BridgeForm& f : r.forms) holding += f.holds;
    CHECK(holding == 1);
  }
  const BridgeReport single = graph_tutte_bridge(make_graph(2, {{0, 1}}));
  CHECK(single.classical == x);
  CHECK(single.embedding == x + y - 1);
  CHECK(single.winner().has_value());
}

TEST_CASE("graph conversion") {
  const OrdinaryGraph og = load_graph_file(testing::fixture_path("fig6.graph"));
  CHECK(og.vertex_names == std::vector<std::string>{"u", "v", "w"});
  CHECK(og.edge_index("c") == 2);
  CHECK(og.edge_index("z") == -1);
  const RibbonGraph g = to_ribbon_graph(og);
  CHECK(g.emerald_count() == 4);
  CHECK(g.edge_count() == 8);
  const OrdinaryGraph back = to_ordinary_graph(g);
  CHECK(back.edges == og.edges);
  CHECK_THROWS_AS(to_ordinary_graph(fixture("fig2.hg")), NotAGraph);
}

TEST_CASE("graph file errors") {
  CHECK_THROWS_AS(load_graph("vertices: [a, b]\nedges: [[a, c]]\n"), ValidationError);
  CHECK_THROWS_AS(load_graph("vertices: [a, a]\nedges: []\n"), ValidationError);
  CHECK_THROWS_AS(load_graph("vertices: [a, b]\nedges: [[a]]\n"), ParseError);
  CHECK_THROWS_AS(load_graph("vertices: [a, b]\nedges: [[a, b]]\nextra: 1\n"), ParseError);
  CHECK_THROWS_AS(load_graph("vertices: [a, b]\nedges: [[a, b]]\nedge_names: [p, q]\n"), ValidationError);
}
