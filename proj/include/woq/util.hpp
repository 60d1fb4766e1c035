#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace woq {

// Thrown when a request exceeds a documented per-operation size guard.
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failure. These conditions are guaranteed by theorems;
// a throw here means an implementation bug, never bad user input.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

#define WOQ_CHECK(cond, msg)                                                   \
  do {                                                                         \
    if (!(cond)) throw ::woq::internal_error(msg);                             \
  } while (0)

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void require_capacity(bool cond, const std::string& msg) {
  if (!cond) throw capacity_error(msg);
}

constexpr int64_t factorial(int n) {
  int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Runs fn(thread_index, begin, end) over [0, total) split into contiguous
// chunks, one per worker. threads <= 1 runs inline.
inline void parallel_chunks(int64_t total, int threads,
                            const std::function<void(int, int64_t, int64_t)>& fn) {
  if (total <= 0) return;
  if (threads <= 1 || total < 2 * threads) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  const int64_t chunk = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int64_t b = t * chunk, e = std::min<int64_t>(total, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, t, b, e] { fn(t, b, e); });
  }
  for (auto& th : pool) th.join();
}

// Deterministic xorshift-based generator for seeded sampling. We do not rely
// on std::mt19937 distribution guarantees so that sampled acceptance checks
// are bit-stable across standard libraries.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound), bound > 0.
  uint64_t below(uint64_t bound) { return next() % bound; }

private:
  uint64_t state_;
};

}  // namespace woq
