#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hypertutte/base_family.hpp"

namespace hypertutte {

// Axis-parallel box of integer points, lo(e) <= c(e) <= hi(e).
class LatticeBox {
 public:
  LatticeBox(IntVector lo, IntVector hi);
  // [lo, hi] in every one of `dimension` coordinates.
  static LatticeBox cube(int dimension, int lo, int hi);
  // [lower(e) - below, upper(e) + above] around a family.
  static LatticeBox around(const BaseFamily& family, int below, int above);

  const IntVector& lo() const { return lo_; }
  const IntVector& hi() const { return hi_; }
  int dimension() const { return static_cast<int>(lo_.size()); }
  // Number of points; saturates at UINT64_MAX.
  std::uint64_t size() const;
  bool contains(const IntVector& c) const;
  // Point at a mixed-radix index, first coordinate most significant.
  IntVector point(std::uint64_t index) const;
  LatticeBox grown(int by) const;

 private:
  IntVector lo_;
  IntVector hi_;
};

int d1(const IntVector& s, const IntVector& c);
int d1_less(const IntVector& s, const IntVector& c);     // sum max(0, c - s)
int d1_greater(const IntVector& s, const IntVector& c);  // sum max(0, s - c)

// Minima over a family; EmptySet if it has no members.
int d1(const BaseFamily& family, const IntVector& c);
int d1_less(const BaseFamily& family, const IntVector& c);
int d1_greater(const BaseFamily& family, const IntVector& c);

// Runs body(begin, end) over [0, count) split into at most `jobs` contiguous
// chunks, each on its own thread (jobs <= 1 runs inline). Rethrows the first
// exception.
void parallel_chunks(std::uint64_t count, int jobs, const std::function<void(std::uint64_t, std::uint64_t)>& body);

}  // namespace hypertutte
