#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace cubix {

// Global worker cap: --threads on the CLI, CUBIX_THREADS in the environment,
// hardware concurrency otherwise.
inline unsigned& thread_limit() {
  static unsigned limit = [] {
    if (const char* env = std::getenv("CUBIX_THREADS")) {
      long v = std::atol(env);
      if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1u;
  }();
  return limit;
}

// Split [lo, hi) into contiguous chunks, one worker per chunk; each chunk
// owns an accumulator slot and the merge is sequential, so results do not
// depend on scheduling.
template <typename Acc>
inline std::vector<Acc> parallel_chunks(std::int64_t lo, std::int64_t hi,
                                        const std::function<void(std::int64_t, std::int64_t, Acc&)>& work) {
  unsigned n = thread_limit();
  std::int64_t len = hi - lo;
  if (len <= 0) return {};
  unsigned chunks = static_cast<unsigned>(std::min<std::int64_t>(n, len));
  std::vector<Acc> accs(chunks);
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < chunks; ++t) {
    std::int64_t c_lo = lo + len * t / chunks;
    std::int64_t c_hi = lo + len * (t + 1) / chunks;
    threads.emplace_back([&, t, c_lo, c_hi] { work(c_lo, c_hi, accs[t]); });
  }
  for (auto& th : threads) th.join();
  return accs;
}

}  // namespace cubix
