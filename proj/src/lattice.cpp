#include "hypertutte/lattice.hpp"

#include <algorithm>
#include <climits>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hypertutte/errors.hpp"

namespace hypertutte {

LatticeBox::LatticeBox(IntVector lo, IntVector hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size()) throw ValidationError("box bounds differ in dimension");
  for (std::size_t e = 0; e < lo_.size(); ++e)
    if (lo_[e] > hi_[e]) throw ValidationError("box has lo > hi");
}

LatticeBox LatticeBox::cube(int dimension, int lo, int hi) {
  return LatticeBox(IntVector(dimension, lo), IntVector(dimension, hi));
}

LatticeBox LatticeBox::around(const BaseFamily& family, int below, int above) {
  IntVector lo = family.lower();
  IntVector hi = family.upper();
  for (int& v : lo) v -= below;
  for (int& v : hi) v += above;
  return LatticeBox(std::move(lo), std::move(hi));
}

std::uint64_t LatticeBox::size() const {
  std::uint64_t n = 1;
  for (std::size_t e = 0; e < lo_.size(); ++e) {
    const auto width = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi_[e]) - lo_[e] + 1);
    if (__builtin_mul_overflow(n, width, &n)) return std::numeric_limits<std::uint64_t>::max();
  }
  return n;
}

bool LatticeBox::contains(const IntVector& c) const {
  if (c.size() != lo_.size()) return false;
  for (std::size_t e = 0; e < c.size(); ++e)
    if (c[e] < lo_[e] || c[e] > hi_[e]) return false;
  return true;
}

IntVector LatticeBox::point(std::uint64_t index) const {
  IntVector c(lo_.size());
  for (std::size_t k = lo_.size(); k-- > 0;) {
    const auto width = static_cast<std::uint64_t>(hi_[k] - lo_[k] + 1);
    c[k] = lo_[k] + static_cast<int>(index % width);
    index /= width;
  }
  return c;
}

LatticeBox LatticeBox::grown(int by) const {
  IntVector lo = lo_, hi = hi_;
  for (int& v : lo) v -= by;
  for (int& v : hi) v += by;
  return LatticeBox(std::move(lo), std::move(hi));
}

int d1(const IntVector& s, const IntVector& c) {
  int total = 0;
  for (std::size_t e = 0; e < s.size(); ++e) total += std::abs(c[e] - s[e]);
  return total;
}

int d1_less(const IntVector& s, const IntVector& c) {
  int total = 0;
  for (std::size_t e = 0; e < s.size(); ++e) total += std::max(0, c[e] - s[e]);
  return total;
}

int d1_greater(const IntVector& s, const IntVector& c) {
  int total = 0;
  for (std::size_t e = 0; e < s.size(); ++e) total += std::max(0, s[e] - c[e]);
  return total;
}

namespace {

int minimum(const BaseFamily& family, const IntVector& c, int (*dist)(const IntVector&, const IntVector&)) {
  if (family.empty()) throw EmptySet("distance to an empty set");
  int best = INT_MAX;
  for (const IntVector& s : family.members()) best = std::min(best, dist(s, c));
  return best;
}

}  // namespace

int d1(const BaseFamily& family, const IntVector& c) { return minimum(family, c, &d1); }
int d1_less(const BaseFamily& family, const IntVector& c) { return minimum(family, c, &d1_less); }
int d1_greater(const BaseFamily& family, const IntVector& c) { return minimum(family, c, &d1_greater); }

void parallel_chunks(std::uint64_t count, int jobs, const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  if (jobs <= 1 || count < 2) {
    body(0, count);
    return;
  }
  const std::uint64_t workers = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), count);
  std::vector<std::thread> threads;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = count * w / workers;
    const std::uint64_t end = count * (w + 1) / workers;
    threads.emplace_back([&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace hypertutte
