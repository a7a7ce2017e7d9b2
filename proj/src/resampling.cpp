#include "fdepth/resampling.hpp"

#include <string>

#include "fdepth/combinatorics.hpp"
#include "fdepth/depth.hpp"
#include "fdepth/error.hpp"

namespace fdepth {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Values below `threshold` would bias the modulo.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t item_seed(std::uint64_t seed, std::string_view id) { return splitmix64(seed ^ fnv1a64(id)); }

BlockPartition partition(std::span<const std::size_t> indices, int K, std::uint64_t seed, std::size_t min_block) {
  if (K < 1) throw Error("K must be >= 1");
  const std::size_t n = indices.size();
  const auto blocks = static_cast<std::size_t>(K);
  if (blocks > n || n / blocks < min_block)
    throw Error("K = " + std::to_string(K) + " is infeasible for " + std::to_string(n) +
                " items: blocks need at least " + std::to_string(min_block) + " items");

  std::vector<std::size_t> order(indices.begin(), indices.end());
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i-- > 1;) std::swap(order[i], order[uniform_below(rng, i + 1)]);

  BlockPartition out;
  out.seed = seed;
  out.blocks.resize(blocks);
  const std::size_t base = n / blocks;
  const std::size_t extra = n % blocks;
  std::size_t pos = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t len = base + (b < extra ? 1 : 0);
    out.blocks[b].assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                         order.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  return out;
}

double resampled_depth(const DepthKernel& kernel, std::span<const std::size_t> pool, std::size_t query, int K,
                       std::uint64_t seed, std::uint64_t* visits) {
  const BlockPartition part = partition(pool, K, item_seed(seed, kernel.id(query)), kernel.min_sample_size());
  double sum = 0.0;
  for (const auto& block : part.blocks) sum += kernel.depth_within(block, query, visits);
  return sum / static_cast<double>(part.blocks.size());
}

std::vector<double> resampled_depths(const DepthKernel& kernel, const DepthParams& params) {
  check_params(params);
  if (!params.K) throw Error("resampling requires K");
  const std::size_t n = kernel.size();
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;

  std::vector<double> out(n);
  const ChunkPlan plan = plan_chunks(n);
  run_chunks(
      plan, params.threads,
      [&](std::size_t chunk, unsigned) {
        for (std::uint64_t i = plan.begin(chunk); i < plan.end(chunk); ++i)
          out[i] = resampled_depth(kernel, pool, static_cast<std::size_t>(i), *params.K, params.seed_or_default());
      },
      params.progress);
  return out;
}

}  // namespace fdepth
