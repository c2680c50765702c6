#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace medax {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp<unsigned>(hc == 0 ? 1 : hc, 1u, 16u));
}

/// Static contiguous chunking over [0, n). Each index is processed exactly
/// once and writes only to its own slot, so results are identical for every
/// thread count.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t, std::size_t)>& body) {
  threads = resolve_threads(threads);
  if (n == 0) return;
  if (threads <= 1 || n < 256) {
    body(0, n);
    return;
  }
  std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::size_t chunk = (n + nt - 1) / nt;
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    std::size_t b = t * chunk;
    std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&body, b, e] { body(b, e); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace medax
