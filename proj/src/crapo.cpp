#include "hypertutte/crapo.hpp"

#include <algorithm>
#include <mutex>

#include "hypertutte/errors.hpp"
#include "hypertutte/jaeger.hpp"

namespace hypertutte {

CrapoInterval interval_from(const IntVector& center, const ActivityRecord& record) {
  return CrapoInterval{center, record.internal, record.external};
}

bool interval_contains(const CrapoInterval& interval, const IntVector& c) {
  if (c.size() != interval.center.size()) return false;
  for (std::size_t e = 0; e < c.size(); ++e) {
    const int k = static_cast<int>(e);
    if (c[e] > interval.center[e] && !interval.external_free.contains(k)) return false;
    if (c[e] < interval.center[e] && !interval.internal_free.contains(k)) return false;
  }
  return true;
}

CrapoInterval crapo_interval(const RibbonGraph& g, const HypertreeSet& all, const Hypertree& h) {
  if (!all.contains(h)) throw NotAHypertree("not a hypertree");
  return interval_from(h, embedding_activities(g, all, h));
}

const char* to_string(PartitionViolation::Kind kind) {
  switch (kind) {
    case PartitionViolation::Kind::uncovered: return "uncovered";
    case PartitionViolation::Kind::multiple: return "multiple";
    case PartitionViolation::Kind::distance: return "distance";
  }
  return "?";
}

namespace {

struct PartialReport {
  std::uint64_t covered_once = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::pair<std::uint64_t, PartitionViolation>> violations;
};

}  // namespace

PartitionReport verify_partition(const BaseFamily& family, const std::vector<CrapoInterval>& intervals,
                                 const LatticeBox& box, int jobs, std::uint64_t budget) {
  if (intervals.size() != family.size()) throw std::invalid_argument("one interval per family member expected");
  if (family.empty()) throw EmptySet("empty family");
  if (box.dimension() != family.dimension()) throw std::invalid_argument("box dimension differs from family");
  const std::uint64_t n = box.size();
  if (n > budget)
    throw BudgetExceeded("box has " + std::to_string(n) + " points, budget " + std::to_string(budget));

  PartitionReport report;
  report.lo = box.lo();
  report.hi = box.hi();
  report.points = n;
  std::vector<std::pair<std::uint64_t, PartitionViolation>> found;
  std::mutex merge;
  parallel_chunks(n, jobs, [&](std::uint64_t begin, std::uint64_t end) {
    PartialReport local;
    auto record = [&](std::uint64_t k, PartitionViolation v) {
      ++local.violation_count;
      if (local.violations.size() < kMaxListedViolations) local.violations.emplace_back(k, std::move(v));
    };
    for (std::uint64_t k = begin; k < end; ++k) {
      const IntVector c = box.point(k);
      std::vector<int> covering;
      for (std::size_t m = 0; m < intervals.size(); ++m)
        if (interval_contains(intervals[m], c)) covering.push_back(static_cast<int>(m));
      if (covering.size() != 1) {
        record(k, {covering.empty() ? PartitionViolation::Kind::uncovered : PartitionViolation::Kind::multiple, c,
                   covering});
        continue;
      }
      const IntVector& h = family[covering.front()];
      if (d1(family, c) != d1(h, c) || d1_less(family, c) != d1_less(h, c) ||
          d1_greater(family, c) != d1_greater(h, c)) {
        record(k, {PartitionViolation::Kind::distance, c, covering});
        continue;
      }
      ++local.covered_once;
    }
    std::lock_guard lock(merge);
    report.covered_once += local.covered_once;
    report.violation_count += local.violation_count;
    for (auto& v : local.violations) found.push_back(std::move(v));
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (found.size() > kMaxListedViolations) found.resize(kMaxListedViolations);
  for (auto& [k, v] : found) report.violations.push_back(std::move(v));
  return report;
}

std::vector<CrapoInterval> embedding_intervals(const RibbonGraph& g, const HypertreeSet& all) {
  std::vector<CrapoInterval> out;
  for (const Hypertree& h : all.members()) out.push_back(interval_from(h, embedding_activities(g, all, h)));
  return out;
}

PartitionReport verify_crapo_partition(const RibbonGraph& g, const std::optional<LatticeBox>& box, int jobs,
                                       std::uint64_t budget) {
  const HypertreeSet all = enumerate_hypertrees(g);
  const LatticeBox window = box ? *box : LatticeBox::around(all, 2, 2);
  return verify_partition(all, embedding_intervals(g, all), window, jobs, budget);
}

}  // namespace hypertutte
