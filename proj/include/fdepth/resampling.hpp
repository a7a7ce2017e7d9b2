#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "fdepth/model.hpp"

namespace fdepth {

class DepthKernel;

struct BlockPartition {
  std::vector<std::vector<std::size_t>> blocks;
  std::uint64_t seed = 0;
};

// Portable uniform integer in [0, bound) from a 64-bit engine: rejection
// sampling on the raw output, then modulo. Unlike std::uniform_int_distribution
// the result is the same on every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Per-item seed: splitmix64(seed XOR fnv1a64(id)).
std::uint64_t item_seed(std::uint64_t seed, std::string_view id);

// Shuffles `indices` with a Fisher-Yates pass driven by std::mt19937_64
// seeded with `seed`, then cuts the result into K contiguous blocks; the
// first (size mod K) blocks get one extra element. Throws Error when K < 1
// or a block would hold fewer than `min_block` items.
BlockPartition partition(std::span<const std::size_t> indices, int K, std::uint64_t seed,
                         std::size_t min_block = 1);

// Block-resampled depth of `query`. The pool (which should contain the
// query) is partitioned with item_seed(seed, id(query)); the query's depth
// is computed against each block B as the sample B plus the query, and the
// K values are averaged in block order. `visits` accumulates the member
// subsets enumerated by the kernel.
double resampled_depth(const DepthKernel& kernel, std::span<const std::size_t> pool, std::size_t query,
                       int K, std::uint64_t seed, std::uint64_t* visits = nullptr);

// resampled_depth for every item of the kernel with the whole sample as the
// pool. Items run in parallel; each writes its own slot.
std::vector<double> resampled_depths(const DepthKernel& kernel, const DepthParams& params);

}  // namespace fdepth
