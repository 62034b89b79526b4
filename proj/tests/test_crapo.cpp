#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertutte/conjecture.hpp"
#include "hypertutte/crapo.hpp"
#include "hypertutte/errors.hpp"
#include "hypertutte/jaeger.hpp"
#include "support.hpp"

using namespace hypertutte;
using testing::fixture;

namespace {

const char* kAllFixtures[] = {"fig1.hg", "fig2.hg", "fig5.hg", "single_edge.hg"};

}  // namespace

TEST_CASE("distances to a single vector") {
  CHECK(d1({1, 0, 2}, {1, 0, 2}) == 0);
  CHECK(d1({1, 0, 2}, {3, -1, 2}) == 3);
  CHECK(d1_less({1, 0, 2}, {3, -1, 2}) == 2);
  CHECK(d1_greater({1, 0, 2}, {3, -1, 2}) == 1);
}

TEST_CASE("distances to a family") {
  const RibbonGraph single = fixture("single_edge.hg");
  const HypertreeSet one = enumerate_hypertrees(single);
  CHECK(d1(one, {4}) == 3);
  CHECK(d1_less(one, {4}) == 3);
  CHECK(d1_greater(one, {4}) == 0);
  CHECK(d1(one, {-1}) == 2);
  CHECK(d1_greater(one, {-1}) == 2);
  CHECK_THROWS_AS(d1(BaseFamily(), {}), EmptySet);
  CHECK_THROWS_AS(d1_less(BaseFamily(), {}), EmptySet);
  CHECK_THROWS_AS(d1_greater(BaseFamily(), {}), EmptySet);

  const HypertreeSet all = enumerate_hypertrees(fixture("fig2.hg"));
  for (const IntVector& h : all.members()) {
    CHECK(d1(all, h) == 0);
    CHECK(d1_less(all, h) == 0);
    CHECK(d1_greater(all, h) == 0);
  }
}

// Some single member attains both one-sided minima, and they add up to d1.
TEST_CASE("one-sided minima are attained together") {
  for (const char* name : kAllFixtures) {
    CAPTURE(name);
    const HypertreeSet all = enumerate_hypertrees(fixture(name));
    const LatticeBox box = LatticeBox::around(all, 2, 2);
    for (std::uint64_t k = 0; k < box.size(); ++k) {
      const IntVector c = box.point(k);
      const int less = d1_less(all, c), greater = d1_greater(all, c);
      bool together = false;
      for (const IntVector& h : all.members())
        together |= d1_less(h, c) == less && d1_greater(h, c) == greater;
      CHECK(together);
      CHECK(d1(all, c) == less + greater);
    }
  }
}

TEST_CASE("lattice boxes") {
  const LatticeBox box({0, -1}, {2, 1});
  CHECK(box.size() == 9);
  CHECK(box.point(0) == IntVector{0, -1});
  CHECK(box.point(1) == IntVector{0, 0});
  CHECK(box.point(3) == IntVector{1, -1});
  CHECK(box.point(8) == IntVector{2, 1});
  CHECK(box.contains({1, 1}));
  CHECK_FALSE(box.contains({3, 0}));
  CHECK(box.grown(1).size() == 25);
  CHECK(LatticeBox::cube(3, -2, 4).size() == 343);
  CHECK(LatticeBox::cube(40, 0, 100).size() == UINT64_MAX);
  CHECK_THROWS_AS(LatticeBox({0, 2}, {1, 1}), ValidationError);
}

TEST_CASE("interval membership") {
  const CrapoInterval iv{{1, 0, 1}, IndexSet{0}, IndexSet{2}};
  CHECK(interval_contains(iv, {1, 0, 1}));
  CHECK(interval_contains(iv, {-5, 0, 9}));
  CHECK_FALSE(interval_contains(iv, {2, 0, 1}));
  CHECK_FALSE(interval_contains(iv, {1, 0, 0}));
  CHECK_FALSE(interval_contains(iv, {1, 1, 1}));
}

TEST_CASE("fig2 interval") {
  const RibbonGraph g = fixture("fig2.hg");
  const HypertreeSet all = enumerate_hypertrees(g);
  const CrapoInterval iv = crapo_interval(g, all, {1, 1, 0, 0});
  CHECK(iv.internal_free == IndexSet{0, 2, 3});
  CHECK(iv.external_free == IndexSet{0});
  CHECK(interval_contains(iv, {1, 1, 0, 0}));
  CHECK_FALSE(interval_contains(iv, {1, 2, 0, 0}));
  CHECK(interval_contains(iv, {-3, 1, 0, -2}));
  CHECK_THROWS_AS(crapo_interval(g, all, {0, 0, 0, 2}), NotAHypertree);
  for (const IntVector& h : all.members()) {
    const CrapoInterval c = crapo_interval(g, all, h);
    const int first = order_emerald(g, h).sequence().front();
    CHECK(c.internal_free.contains(first));
    CHECK(c.external_free.contains(first));
    CHECK(interval_contains(c, h));
  }
}

TEST_CASE("fig2 box partition") {
  const PartitionReport r = verify_crapo_partition(fixture("fig2.hg"), LatticeBox::cube(4, -2, 4));
  CHECK(r.passed());
  CHECK(r.points == 2401);
  CHECK(r.covered_once == 2401);
  CHECK(r.violations.empty());
}

TEST_CASE("partition holds on every fixture and random instances") {
  for (const char* name : kAllFixtures) {
    CAPTURE(name);
    CHECK(verify_crapo_partition(fixture(name)).passed());
  }
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    CAPTURE(seed);
    CHECK(verify_crapo_partition(random_instance({}, seed)).passed());
  }
}

TEST_CASE("single edge partition") {
  const PartitionReport r = verify_crapo_partition(fixture("single_edge.hg"), LatticeBox::cube(1, -3, 5));
  CHECK(r.passed());
  CHECK(r.points == 9);
  CHECK(r.covered_once == 9);
}

TEST_CASE("swapping one interval's free sets is caught") {
  const RibbonGraph g = fixture("fig2.hg");
  const HypertreeSet all = enumerate_hypertrees(g);
  auto intervals = embedding_intervals(g, all);
  const int k = all.index_of({1, 1, 0, 0});
  std::swap(intervals[k].internal_free, intervals[k].external_free);
  const PartitionReport r = verify_partition(all, intervals, LatticeBox::around(all, 2, 2));
  CHECK_FALSE(r.passed());
  CHECK(r.violation_count > 0);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.size() <= kMaxListedViolations);
  CHECK(r.covered_once + r.violation_count >= r.points);
}

TEST_CASE("violations name their kind") {
  const RibbonGraph g = fixture("fig2.hg");
  const HypertreeSet all = enumerate_hypertrees(g);
  auto intervals = embedding_intervals(g, all);
  // a fully free interval swallows everything
  intervals[0].internal_free = IndexSet::full(4);
  intervals[0].external_free = IndexSet::full(4);
  const PartitionReport r = verify_partition(all, intervals, LatticeBox::around(all, 1, 1));
  REQUIRE_FALSE(r.violations.empty());
  bool multiple = false;
  for (const PartitionViolation& v : r.violations) {
    multiple |= v.kind == PartitionViolation::Kind::multiple;
    if (v.kind == PartitionViolation::Kind::multiple) CHECK(v.covering.size() >= 2);
  }
  CHECK(multiple);
  CHECK(std::string(to_string(PartitionViolation::Kind::uncovered)) == "uncovered");
}

TEST_CASE("intervals are pairwise disjoint on the box") {
  for (const char* name : kAllFixtures) {
    CAPTURE(name);
    const RibbonGraph g = fixture(name);
    const HypertreeSet all = enumerate_hypertrees(g);
    const auto intervals = embedding_intervals(g, all);
    const LatticeBox box = LatticeBox::around(all, 2, 2);
    for (std::size_t a = 0; a < intervals.size(); ++a)
      for (std::size_t b = a + 1; b < intervals.size(); ++b) {
        bool shared = false;
        for (std::uint64_t k = 0; k < box.size() && !shared; ++k) {
          const IntVector c = box.point(k);
          shared = interval_contains(intervals[a], c) && interval_contains(intervals[b], c);
        }
        CHECK_FALSE(shared);
      }
  }
}

TEST_CASE("a larger box adds no violations") {
  const RibbonGraph g = fixture("fig5.hg");
  const HypertreeSet all = enumerate_hypertrees(g);
  const LatticeBox box = LatticeBox::around(all, 2, 2);
  const PartitionReport small = verify_crapo_partition(g, box);
  const PartitionReport big = verify_crapo_partition(g, box.grown(1));
  CHECK(small.passed());
  CHECK(big.passed());
  CHECK(big.points > small.points);
}

TEST_CASE("budget and worker count") {
  const RibbonGraph g = fixture("fig2.hg");
  CHECK_THROWS_AS(verify_crapo_partition(g, LatticeBox::cube(4, -2, 4), 1, 100), BudgetExceeded);
  const PartitionReport one = verify_crapo_partition(g, LatticeBox::cube(4, -2, 3), 1);
  const PartitionReport many = verify_crapo_partition(g, LatticeBox::cube(4, -2, 3), 7);
  CHECK(one.points == many.points);
  CHECK(one.covered_once == many.covered_once);

  auto intervals = embedding_intervals(g, enumerate_hypertrees(g));
  std::swap(intervals[2].internal_free, intervals[2].external_free);
  const HypertreeSet all = enumerate_hypertrees(g);
  const PartitionReport a = verify_partition(all, intervals, LatticeBox::cube(4, -2, 3), 1);
  const PartitionReport b = verify_partition(all, intervals, LatticeBox::cube(4, -2, 3), 5);
  CHECK(a.violation_count == b.violation_count);
  REQUIRE(a.violations.size() == b.violations.size());
  for (std::size_t k = 0; k < a.violations.size(); ++k) CHECK(a.violations[k].point == b.violations[k].point);
}

TEST_CASE("parallel chunks cover the range once") {
  std::vector<int> hits(1000, 0);
  parallel_chunks(hits.size(), 6, [&](std::uint64_t begin, std::uint64_t end) {
    for (auto k = begin; k < end; ++k) ++hits[k];
  });
  CHECK(std::count(hits.begin(), hits.end(), 1) == 1000);
  CHECK_THROWS_AS(parallel_chunks(10, 3, [](std::uint64_t, std::uint64_t) { throw EmptySet("boom"); }), EmptySet);
}
