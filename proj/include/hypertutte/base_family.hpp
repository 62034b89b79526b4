#pragma once

#include <span>
#include <vector>

namespace hypertutte {

// Integer vector indexed by ground elements (emerald nodes for hypergraphs).
using IntVector = std::vector<int>;

// e + 1_plus - 1_minus
IntVector shifted(const IntVector& v, int plus, int minus);

// Finite duplicate-free set of integer vectors of one common dimension, kept
// in lexicographic order: hypertrees of a hypergraph or the bases of an
// explicitly listed polymatroid.
class BaseFamily {
 public:
  BaseFamily() = default;
  explicit BaseFamily(std::vector<IntVector> members);

  bool contains(const IntVector& v) const;
  std::span<const IntVector> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  int dimension() const { return dimension_; }
  const IntVector& operator[](std::size_t i) const { return members_[i]; }
  // Position in lexicographic order, or -1.
  int index_of(const IntVector& v) const;

  // Coordinatewise minimum / maximum over the members.
  IntVector lower() const;
  IntVector upper() const;

  friend bool operator==(const BaseFamily&, const BaseFamily&) = default;

 private:
  std::vector<IntVector> members_;
  int dimension_ = 0;
};

}  // namespace hypertutte
