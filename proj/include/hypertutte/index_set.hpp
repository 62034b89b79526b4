#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hypertutte {

// Set of small non-negative indices (< 64) stored as a bit mask. Used for
// edge sets of spanning trees and for sets of ground elements.
class IndexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> items) {
    for (int i : items) insert(i);
  }

  static constexpr IndexSet full(int n) {
    return IndexSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr IndexSet with(int i) const {
    IndexSet s = *this;
    s.insert(i);
    return s;
  }
  constexpr IndexSet without(int i) const {
    IndexSet s = *this;
    s.erase(i);
    return s;
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr IndexSet operator^(IndexSet a, IndexSet b) { return IndexSet(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;
  friend constexpr auto operator<=>(IndexSet a, IndexSet b) { return a.bits_ <=> b.bits_; }

  // Members in increasing order.
  std::vector<int> items() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace hypertutte
