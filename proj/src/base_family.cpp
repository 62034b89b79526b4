#include "hypertutte/base_family.hpp"

#include <algorithm>

#include "hypertutte/errors.hpp"

namespace hypertutte {

IntVector shifted(const IntVector& v, int plus, int minus) {
  IntVector out = v;
  ++out[plus];
  --out[minus];
  return out;
}

BaseFamily::BaseFamily(std::vector<IntVector> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty()) dimension_ = static_cast<int>(members_.front().size());
  for (const auto& m : members_)
    if (static_cast<int>(m.size()) != dimension_) throw ValidationError("base vectors differ in dimension");
}

bool BaseFamily::contains(const IntVector& v) const { return std::binary_search(members_.begin(), members_.end(), v); }

int BaseFamily::index_of(const IntVector& v) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  return it != members_.end() && *it == v ? static_cast<int>(it - members_.begin()) : -1;
}

IntVector BaseFamily::lower() const {
  if (members_.empty()) throw EmptySet("empty base family");
  IntVector out = members_.front();
  for (const auto& m : members_)
    for (int e = 0; e < dimension_; ++e) out[e] = std::min(out[e], m[e]);
  return out;
}

IntVector BaseFamily::upper() const {
  if (members_.empty()) throw EmptySet("empty base family");
  IntVector out = members_.front();
  for (const auto& m : members_)
    for (int e = 0; e < dimension_; ++e) out[e] = std::max(out[e], m[e]);
  return out;
}

}  // namespace hypertutte
