#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fdepth/model.hpp"

namespace fdepth {

// C(n, k). Throws Error when the value does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// The k-subset of {0, ..., n-1} with the given rank in lexicographic order.
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank);

// Advance `combo` (sorted, values < n) to its lexicographic successor.
// Returns the first position that changed, or combo.size() when exhausted.
std::size_t next_combination(std::span<std::size_t> combo, std::size_t n);

// Split [0, total) into contiguous chunks. The chunk layout depends only on
// `total`, never on the worker count, so per-chunk partial results can be
// merged in chunk order to obtain identical output for any thread count.
struct ChunkPlan {
  std::uint64_t total = 0;
  std::size_t chunks = 0;

  std::uint64_t begin(std::size_t c) const { return split(c); }
  std::uint64_t end(std::size_t c) const { return split(c + 1); }

 private:
  std::uint64_t split(std::size_t c) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * c / chunks);
  }
};

ChunkPlan plan_chunks(std::uint64_t total, std::size_t max_chunks = 256);

// Effective worker count for a requested value (0 = hardware concurrency).
unsigned resolve_threads(unsigned requested);

// Runs body(chunk, worker) for every chunk on up to `threads` workers,
// worker in [0, resolve_threads(threads)). Chunks are claimed dynamically;
// `progress` (if set) is called under a lock with the completed fraction. Exceptions thrown by a
// body are rethrown on the caller's thread.
void run_chunks(const ChunkPlan& plan, unsigned threads,
                const std::function<void(std::size_t chunk, unsigned worker)>& body,
                const ProgressFn& progress = {});

}  // namespace fdepth
