#include "fdepth/combinatorics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "fdepth/error.hpp"

namespace fdepth {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) throw Error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
  if (rank >= binomial(n, k)) throw Error("combination rank out of range");
  std::vector<std::size_t> combo(k);
  std::size_t next = 0;
  for (std::size_t pos = 0; pos < k; ++pos) {
    for (std::size_t v = next;; ++v) {
      // number of combinations with `v` at this position
      const std::uint64_t count = binomial(n - v - 1, k - pos - 1);
      if (rank < count) {
        combo[pos] = v;
        next = v + 1;
        break;
      }
      rank -= count;
    }
  }
  return combo;
}

std::size_t next_combination(std::span<std::size_t> combo, std::size_t n) {
  const std::size_t k = combo.size();
  std::size_t pos = k;
  while (pos > 0) {
    --pos;
    if (combo[pos] < n - k + pos) {
      ++combo[pos];
      for (std::size_t q = pos + 1; q < k; ++q) combo[q] = combo[q - 1] + 1;
      return pos;
    }
  }
  return k;
}

ChunkPlan plan_chunks(std::uint64_t total, std::size_t max_chunks) {
  ChunkPlan plan;
  plan.total = total;
  plan.chunks = static_cast<std::size_t>(std::min<std::uint64_t>(total, std::max<std::size_t>(max_chunks, 1)));
  return plan;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void run_chunks(const ChunkPlan& plan, unsigned threads,
                const std::function<void(std::size_t, unsigned)>& body, const ProgressFn& progress) {
  if (plan.chunks == 0) return;
  const unsigned workers = std::min<unsigned>(resolve_threads(threads), plan.chunks);

  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::mutex mu;
  std::exception_ptr failure;

  auto work = [&](unsigned worker) {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= plan.chunks) return;
      try {
        body(c, worker);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next.store(plan.chunks);
        return;
      }
      if (progress) {
        std::lock_guard lock(mu);
        ++done;
        progress(static_cast<double>(done) / static_cast<double>(plan.chunks));
      }
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace fdepth
