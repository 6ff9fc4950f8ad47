#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace dcinv {

// Thread count from DCINV_THREADS, else hardware concurrency (at least 1).
std::size_t default_thread_count();

// Splits [0, count) into fixed blocks of `block` items. Each block is folded
// into its own copy of `init` by `accumulate(acc, i)` in index order, and the
// block results are merged in block order. The result does not depend on the
// number of threads.
template <class T, class Accumulate, class Merge>
T ordered_block_reduce(std::size_t count, std::size_t block, const T& init, Accumulate accumulate,
                       Merge merge, std::size_t threads) {
  block = std::max<std::size_t>(block, 1);
  const std::size_t nblocks = (count + block - 1) / block;
  std::vector<T> partial(nblocks, init);
  auto run_block = [&](std::size_t b) {
    const std::size_t end = std::min(count, (b + 1) * block);
    for (std::size_t i = b * block; i < end; ++i) accumulate(partial[b], i);
  };
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(nblocks, 1));
  if (threads == 1) {
    for (std::size_t b = 0; b < nblocks; ++b) run_block(b);
  } else {
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t b = t; b < nblocks; b += threads) {
          try {
            run_block(b);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }
  T out = init;
  for (auto& p : partial) merge(out, p);
  return out;
}

}  // namespace dcinv
