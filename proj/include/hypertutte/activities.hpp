#pragma once

#include <string>
#include <vector>

#include "hypertutte/base_family.hpp"
#include "hypertutte/index_set.hpp"

namespace hypertutte {

// Total order on ground elements (emerald nodes), smallest first.
class HyperedgeOrder {
 public:
  HyperedgeOrder() = default;
  // Throws std::invalid_argument unless `sequence` is a permutation of 0..n-1.
  explicit HyperedgeOrder(std::vector<int> sequence);
  static HyperedgeOrder identity(int n);

  const std::vector<int>& sequence() const { return sequence_; }
  int rank(int element) const { return rank_[element]; }
  int size() const { return static_cast<int>(sequence_.size()); }
  bool less(int a, int b) const { return rank_[a] < rank_[b]; }

  friend bool operator==(const HyperedgeOrder& a, const HyperedgeOrder& b) { return a.sequence_ == b.sequence_; }

 private:
  std::vector<int> sequence_;
  std::vector<int> rank_;
};

struct ActivityRecord {
  IndexSet internal;
  IndexSet external;

  int only_internal() const { return (internal - external).size(); }
  int only_external() const { return (external - internal).size(); }
  int both() const { return (internal & external).size(); }

  friend bool operator==(const ActivityRecord&, const ActivityRecord&) = default;
};

// Which elements an active element is compared against.
enum class ActivityRule {
  min,  // e active unless some smaller f admits the exchange
  max,  // e active unless some larger f admits the exchange
};

// e is internally active for b iff b - 1_e + 1_f is not a base for any
// f before e (min rule) / after e (max rule); externally active likewise with
// b + 1_e - 1_f.
ActivityRecord activities(const BaseFamily& bases, const IntVector& b, const HyperedgeOrder& order,
                          ActivityRule rule = ActivityRule::min);

}  // namespace hypertutte
