#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mononeedle {

/// Samples per chunk. Fixed so results do not depend on the worker count.
inline constexpr std::int64_t kChunkSize = std::int64_t{1} << 16;

struct ParallelOptions {
  /// Worker threads; 0 means hardware concurrency.
  int threads = 0;
};

inline int resolve_threads(int requested) noexcept {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/**
 * Runs fn(chunk_index, chunk_samples) for every chunk of `total` samples and
 * returns the per-chunk results in chunk order. Each chunk owns its RNG
 * stream, so the output is identical for any thread count.
 */
template <typename Result, typename ChunkFn>
std::vector<Result> run_chunks(std::int64_t total, const ParallelOptions& options, ChunkFn&& fn) {
  const std::int64_t chunks = (total + kChunkSize - 1) / kChunkSize;
  std::vector<Result> results(static_cast<std::size_t>(chunks));
  auto chunk_samples = [total](std::int64_t c) { return std::min(kChunkSize, total - c * kChunkSize); };

  const int workers = static_cast<int>(std::min<std::int64_t>(resolve_threads(options.threads), chunks));
  if (workers <= 1) {
    for (std::int64_t c = 0; c < chunks; ++c) results[static_cast<std::size_t>(c)] = fn(c, chunk_samples(c));
    return results;
  }

  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::int64_t c = next++; c < chunks; c = next++) {
          results[static_cast<std::size_t>(c)] = fn(c, chunk_samples(c));
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = chunks;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace mononeedle
