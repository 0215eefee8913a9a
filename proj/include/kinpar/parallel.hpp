#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace kinpar {

// Inclusive 1-based index range [start, end] owned by one rank; empty when
// start > end. my_chunk keeps the historical "end - start" count, range_size()
// is the number of indices actually owned.
struct WorkRange {
  std::size_t start = 1;
  std::size_t end = 0;
  long long my_chunk = -1;

  bool empty() const { return start > end; }
  std::size_t range_size() const { return empty() ? 0 : end - start + 1; }
};

// Even block partition of {1, ..., work} over n_p ranks, the first
// (work mod n_p) ranks taking one extra item. Throws ConfigError on n_p == 0
// or rank >= n_p.
WorkRange work_distribution(std::size_t work, std::size_t n_p, std::size_t rank);

enum class Schedule {
  Dynamic,  // shared counter, each worker grabs the next index
  Static,   // contiguous blocks from work_distribution
};

// Runs fn(i) for every i in [begin, end) on up to `workers` threads. Each
// index runs at most once. After a failure, indices above the lowest failure
// seen so far are skipped; the exception of the lowest failing index is
// rethrown, independent of thread timing.
template <class Fn>
void parallel_for(std::size_t begin, std::size_t end, unsigned workers, Schedule schedule,
                  Fn&& fn) {
  if (end <= begin) return;
  const std::size_t count = end - begin;
  if (workers <= 1 || count == 1) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(workers, count));

  std::atomic<std::size_t> next{begin};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::size_t error_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error;

  auto run_one = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
      failed = true;
    }
  };

  auto worker = [&](unsigned rank) {
    if (schedule == Schedule::Dynamic) {
      std::size_t i;
      while (!failed && (i = next++) < end) run_one(i);
    } else {
      const WorkRange range = work_distribution(count, n_threads, rank);
      for (std::size_t m = range.start; m <= range.end && !failed; ++m) run_one(begin + m - 1);
    }
  };

  {
    std::vector<std::jthread> threads;
    threads.reserve(n_threads - 1);
    for (unsigned r = 1; r < n_threads; ++r) threads.emplace_back(worker, r);
    worker(0);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace kinpar
