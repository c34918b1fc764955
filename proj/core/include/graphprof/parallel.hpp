#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace graphprof {

// Static partition of [0, total) into `threads` contiguous chunks; worker w
// runs fn(begin, end, w). Partial results must be written per-chunk and
// combined by the caller in chunk order, so that the result is identical
// for every thread count.
template <typename Fn>
void parallel_chunks(std::size_t total, unsigned threads, Fn&& fn) {
  if (threads <= 1 || total == 0) {
    fn(std::size_t{0}, total, 0u);
    return;
  }
  if (threads > total) threads = static_cast<unsigned>(total);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::size_t base = total / threads, extra = total % threads, begin = 0;
  for (unsigned w = 0; w < threads; ++w) {
    std::size_t len = base + (w < extra ? 1 : 0);
    pool.emplace_back(fn, begin, begin + len, w);
    begin += len;
  }
  for (auto& t : pool) t.join();
}

}  // namespace graphprof
