#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypertutte/activities.hpp"
#include "hypertutte/hypertrees.hpp"
#include "hypertutte/lattice.hpp"
#include "hypertutte/ribbon_graph.hpp"

namespace hypertutte {

// Points c with c(e) > center(e) only where e is external_free and
// c(e) < center(e) only where e is internal_free.
struct CrapoInterval {
  IntVector center;
  IndexSet internal_free;
  IndexSet external_free;
};

CrapoInterval interval_from(const IntVector& center, const ActivityRecord& record);
bool interval_contains(const CrapoInterval& interval, const IntVector& c);

// Interval from the embedding activities of h. NotAHypertree if h is not in all.
CrapoInterval crapo_interval(const RibbonGraph& g, const HypertreeSet& all, const Hypertree& h);

struct PartitionViolation {
  enum class Kind { uncovered, multiple, distance };
  Kind kind = Kind::uncovered;
  IntVector point;
  std::vector<int> covering;  // indices into the family
};

const char* to_string(PartitionViolation::Kind kind);

struct PartitionReport {
  IntVector lo;
  IntVector hi;
  std::uint64_t points = 0;
  std::uint64_t covered_once = 0;
  std::uint64_t violation_count = 0;
  std::vector<PartitionViolation> violations;  // first few, in box order
  bool passed() const { return violation_count == 0; }
};

constexpr std::uint64_t kDefaultBoxBudget = 5'000'000;
constexpr std::size_t kMaxListedViolations = 64;

// For every c in the box: exactly one interval contains c, and its center h
// has d1(H,c) = d1(h,c), d1<(H,c) = d1<(h,c), d1>(H,c) = d1>(h,c).
// intervals[k] belongs to family[k]. BudgetExceeded if the box is too large.
PartitionReport verify_partition(const BaseFamily& family, const std::vector<CrapoInterval>& intervals,
                                 const LatticeBox& box, int jobs = 1,
                                 std::uint64_t budget = kDefaultBoxBudget);

// Embedding intervals of all hypertrees of g. Default box is
// [lower - 2, upper + 2].
std::vector<CrapoInterval> embedding_intervals(const RibbonGraph& g, const HypertreeSet& all);
PartitionReport verify_crapo_partition(const RibbonGraph& g, const std::optional<LatticeBox>& box = std::nullopt,
                                       int jobs = 1, std::uint64_t budget = kDefaultBoxBudget);

}  // namespace hypertutte
