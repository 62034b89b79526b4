#include "hypertutte/activities.hpp"

#include <numeric>
#include <stdexcept>

namespace hypertutte {

HyperedgeOrder::HyperedgeOrder(std::vector<int> sequence) : sequence_(std::move(sequence)) {
  const int n = static_cast<int>(sequence_.size());
  rank_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int e = sequence_[i];
    if (e < 0 || e >= n || rank_[e] != -1) throw std::invalid_argument("order is not a permutation");
    rank_[e] = i;
  }
}

HyperedgeOrder HyperedgeOrder::identity(int n) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return HyperedgeOrder(std::move(seq));
}

ActivityRecord activities(const BaseFamily& bases, const IntVector& b, const HyperedgeOrder& order,
                          ActivityRule rule) {
  if (order.size() != static_cast<int>(b.size())) throw std::invalid_argument("order and vector sizes differ");
  ActivityRecord out;
  const auto& seq = order.sequence();
  const int n = order.size();
  for (int pos = 0; pos < n; ++pos) {
    const int e = seq[pos];
    bool internal = true;
    bool external = true;
    const int lo = rule == ActivityRule::min ? 0 : pos + 1;
    const int hi = rule == ActivityRule::min ? pos : n;
    for (int q = lo; q < hi && (internal || external); ++q) {
      const int f = seq[q];
      if (internal && bases.contains(shifted(b, f, e))) internal = false;
      if (external && bases.contains(shifted(b, e, f))) external = false;
    }
    if (internal) out.internal.insert(e);
    if (external) out.external.insert(e);
  }
  return out;
}

}  // namespace hypertutte
