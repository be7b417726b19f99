#ifndef HOPFLUID_PARALLEL_HPP
#define HOPFLUID_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hopfluid {

/// Worker cap: HOPFLUID_THREADS if set, else hardware concurrency.
inline int max_threads() {
  if (const char* env = std::getenv("HOPFLUID_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Chunked parallel loop over [0, n). Results must be written to per-index
/// storage by the body; reductions happen after the join so they stay
/// deterministic regardless of the thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
  const int nt = std::min<std::size_t>(max_threads(), n == 0 ? 1 : n);
  if (nt <= 1 || n < 256) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(body, lo, hi);
  }
  for (auto& th : pool) th.join();
}

}  // namespace hopfluid

#endif
