// A minimal fork-join loop.  Work items are handed out by an atomic
// counter; callers write results into per-index slots, so the output does
// not depend on scheduling.

#ifndef IGTN_PARALLEL_HPP_
#define IGTN_PARALLEL_HPP_

#include <algorithm>  // for min
#include <atomic>     // for atomic
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <exception>  // for exception_ptr
#include <mutex>      // for mutex
#include <random>     // for mt19937_64, seed_seq
#include <thread>     // for thread
#include <vector>     // for vector

namespace igtn {

  //! 0 means hardware concurrency.
  inline unsigned resolve_threads(unsigned threads) {
    if (threads == 0) {
      threads = std::thread::hardware_concurrency();
    }
    return threads == 0 ? 1 : threads;
  }

  //! Calls f(i) for i in [0, count).  The first exception thrown by any
  //! call is rethrown after all workers stop.
  template <typename F>
  void parallel_for(std::size_t count, F&& f, unsigned threads = 0) {
    threads = static_cast<unsigned>(
        std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    auto                     work = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
          next = count;
        }
      }
    };
    if (threads <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(work);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

  //! An independent generator for work item \p index.
  inline std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
  }

}  // namespace igtn

#endif  // IGTN_PARALLEL_HPP_
