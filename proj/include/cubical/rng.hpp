#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace cubical {

// The project-wide deterministic generator: Knuth's MMIX linear congruential
// step, upper 32 bits taken as output. Every seeded feature (tree generation,
// sampled sweeps) uses exactly this; results are platform-independent.
struct Lcg64 {
  uint64_t state;

  explicit Lcg64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state;
  }

  uint32_t next_u32() { return uint32_t(next() >> 32); }

  // Uniform-ish in [0, n); the modulo bias is irrelevant here and keeps the
  // generator trivially reproducible.
  int next_below(int n) { return int(next_u32() % uint32_t(n)); }
};

// Runs fn(lo, hi) over [0, total) split into chunks pulled from an atomic
// counter. Callers that need determinism must write results into slots
// indexed by position, never append.
template <class F>
void parallel_chunks(long total, int threads, F&& fn) {
  if (threads < 1) threads = 1;
  if (total <= 0) return;
  long chunk = std::max<long>(1, total / (long(threads) * 16));
  if (threads == 1) {
    fn(0L, total);
    return;
  }
  std::atomic<long> next{0};
  auto worker = [&] {
    for (;;) {
      long lo = next.fetch_add(chunk);
      if (lo >= total) return;
      fn(lo, std::min(total, lo + chunk));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(size_t(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

inline int default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

}  // namespace cubical
