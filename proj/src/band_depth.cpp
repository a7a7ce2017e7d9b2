#include "fdepth/band_depth.hpp"

#include <algorithm>
#include <string>

#include "fdepth/combinatorics.hpp"
#include "fdepth/error.hpp"
#include "fdepth/simd/band_kernels.hpp"

namespace fdepth {
namespace {

// Curves packed row-major, one row per curve.
class CurveMatrix {
 public:
  explicit CurveMatrix(const FunctionalSample& sample)
      : n_(sample.size()), len_(sample.grid().size()), data_(n_ * len_) {
    const auto& curves = sample.univariate();
    for (std::size_t i = 0; i < n_; ++i)
      std::copy(curves[i].values.begin(), curves[i].values.end(), data_.begin() + i * len_);
  }

  std::size_t size() const { return n_; }
  std::size_t length() const { return len_; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * len_, len_}; }

 private:
  std::size_t n_;
  std::size_t len_;
  std::vector<double> data_;
};

// Envelopes of every prefix of the current combination, so advancing to
// the lexicographic successor only rebuilds the levels that changed.
class EnvelopeStack {
 public:
  EnvelopeStack(std::size_t depth, std::size_t len, double tol)
      : len_(len), tol_(tol), lower_(depth * len), upper_(depth * len),
        wide_lower_(tol > 0 ? len : 0), wide_upper_(tol > 0 ? len : 0) {}

  // row_of(p) yields the curve at combination position p.
  template <class RowOf>
  void rebuild(std::size_t k, std::size_t from, RowOf&& row_of, const simd::BandKernels& kern) {
    for (std::size_t p = from; p < k; ++p) {
      auto row = row_of(p);
      double* lo = lower_.data() + p * len_;
      double* hi = upper_.data() + p * len_;
      if (p == 0) {
        std::copy(row.begin(), row.end(), lo);
        std::copy(row.begin(), row.end(), hi);
      } else {
        std::copy_n(lo - len_, len_, lo);
        std::copy_n(hi - len_, len_, hi);
        kern.merge_envelope(row, {lo, len_}, {hi, len_});
      }
    }
    top_ = k - 1;
    if (tol_ > 0) {
      const double* lo = lower_.data() + top_ * len_;
      const double* hi = upper_.data() + top_ * len_;
      for (std::size_t t = 0; t < len_; ++t) {
        wide_lower_[t] = lo[t] - tol_;
        wide_upper_[t] = hi[t] + tol_;
      }
    }
  }

  std::span<const double> lower() const {
    return tol_ > 0 ? std::span<const double>(wide_lower_) : std::span<const double>(lower_.data() + top_ * len_, len_);
  }
  std::span<const double> upper() const {
    return tol_ > 0 ? std::span<const double>(wide_upper_) : std::span<const double>(upper_.data() + top_ * len_, len_);
  }

 private:
  std::size_t len_;
  double tol_;
  std::size_t top_ = 0;
  std::vector<double> lower_, upper_;
  std::vector<double> wide_lower_, wide_upper_;
};

void require_univariate(const FunctionalSample& sample, const DepthParams& params) {
  if (sample.is_multivariate())
    throw Error("band depth needs univariate curves; use simplicial band depth for multivariate samples");
  require_valid(validate_functional(sample, params.deep_check));
}

}  // namespace

Envelope envelope(const FunctionalSample& sample, std::span<const std::size_t> indices) {
  const auto& curves = sample.univariate();
  if (indices.empty()) throw Error("envelope needs at least one curve");
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("envelope indices must be distinct");
  if (sorted.back() >= curves.size())
    throw Error("curve index " + std::to_string(sorted.back()) + " out of range");

  Envelope env{curves[indices[0]].values, curves[indices[0]].values};
  for (std::size_t r = 1; r < indices.size(); ++r) {
    const auto& x = curves[indices[r]].values;
    if (x.size() != env.lower.size()) throw Error("curves have different lengths");
    for (std::size_t t = 0; t < x.size(); ++t) {
      env.lower[t] = std::min(env.lower[t], x[t]);
      env.upper[t] = std::max(env.upper[t], x[t]);
    }
  }
  return env;
}

bool contains(const Envelope& env, std::span<const double> x, double tol) {
  if (x.size() != env.lower.size()) throw Error("curve length does not match the band");
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (!(env.lower[t] - tol <= x[t] && x[t] <= env.upper[t] + tol)) return false;
  }
  return true;
}

double containment_fraction(const Envelope& env, std::span<const double> x, double tol) {
  if (x.size() != env.lower.size()) throw Error("curve length does not match the band");
  if (x.empty()) return 0.0;
  std::size_t inside = 0;
  for (std::size_t t = 0; t < x.size(); ++t) inside += env.lower[t] - tol <= x[t] && x[t] <= env.upper[t] + tol;
  return static_cast<double>(inside) / static_cast<double>(x.size());
}

double band_term(std::uint64_t count, std::size_t sample_size, std::size_t j, std::size_t divisor) {
  const double bands = static_cast<double>(binomial(sample_size, j));
  if (bands == 0.0) return 0.0;
  return static_cast<double>(count) / (static_cast<double>(divisor) * bands);
}

double BandTally::term(std::size_t i, int j) const {
  return band_term(counts[i][static_cast<std::size_t>(j - 2)], sample_size, static_cast<std::size_t>(j), divisor);
}

double BandTally::depth(std::size_t i) const {
  double total = 0.0;
  for (int j = 2; j <= J; ++j) total += term(i, j);
  return total;
}

BandTally band_tally(const FunctionalSample& sample, const DepthParams& params) {
  check_params(params);
  require_univariate(sample, params);
  const std::size_t n = sample.size();
  if (n < static_cast<std::size_t>(params.J) + 1)
    throw Error("band depth needs at least J + 1 = " + std::to_string(params.J + 1) + " curves, got " +
                std::to_string(n));

  const CurveMatrix curves(sample);
  const std::size_t len = curves.length();
  const auto& kern = simd::active_kernels();
  const unsigned workers = resolve_threads(params.threads);

  BandTally tally;
  tally.sample_size = n;
  tally.divisor = params.relax ? len : 1;
  tally.J = params.J;
  tally.counts.assign(n, std::vector<std::uint64_t>(static_cast<std::size_t>(params.J - 1), 0));

  const int levels = params.J - 1;
  for (int j = 2; j <= params.J; ++j) {
    const auto k = static_cast<std::size_t>(j);
    const ChunkPlan plan = plan_chunks(binomial(n, k));
    std::vector<std::vector<std::uint64_t>> acc(workers, std::vector<std::uint64_t>(n, 0));

    ProgressFn progress;
    if (params.progress) {
      progress = [&, level = j - 2](double f) { params.progress((level + f) / levels); };
    }

    run_chunks(
        plan, params.threads,
        [&](std::size_t chunk, unsigned worker) {
          auto& local = acc[worker];
          std::vector<std::size_t> combo = unrank_combination(n, k, plan.begin(chunk));
          std::vector<char> member(n, 0);
          EnvelopeStack stack(k, len, params.band_tol());
          std::size_t changed = 0;
          for (std::uint64_t r = plan.begin(chunk); r < plan.end(chunk); ++r) {
            stack.rebuild(k, changed, [&](std::size_t p) { return curves.row(combo[p]); }, kern);
            for (std::size_t c : combo) member[c] = 1;
            const auto lo = stack.lower();
            const auto hi = stack.upper();
            if (params.relax) {
              for (std::size_t i = 0; i < n; ++i)
                if (!member[i]) local[i] += kern.count_inside(lo, hi, curves.row(i));
            } else {
              for (std::size_t i = 0; i < n; ++i)
                if (!member[i]) local[i] += kern.all_inside(lo, hi, curves.row(i));
            }
            for (std::size_t c : combo) member[c] = 0;
            changed = next_combination(combo, n);
          }
        },
        progress);

    // Integer sums: exact in any order.
    for (const auto& local : acc)
      for (std::size_t i = 0; i < n; ++i) tally.counts[i][k - 2] += local[i];
  }
  return tally;
}

DepthResult band_depth(const FunctionalSample& sample, const DepthParams& params) {
  const BandTally tally = band_tally(sample, params);
  DepthResult result;
  result.method = params.relax ? "modified_band_depth" : "band_depth";
  result.params = params;
  result.params.progress = nullptr;
  result.entries.reserve(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) result.entries.push_back({sample.id(i), tally.depth(i)});
  return result;
}

double band_depth_within(const FunctionalSample& sample, std::span<const std::size_t> members,
                         std::size_t query, const DepthParams& params, std::uint64_t* visits) {
  check_params(params);
  const auto& curves = sample.univariate();
  if (query >= curves.size()) throw Error("query index out of range");
  const std::size_t len = sample.grid().size();
  for (std::size_t m : members) {
    if (m >= curves.size()) throw Error("member index out of range");
    if (curves[m].values.size() != len) throw Error("curve '" + curves[m].id + "' does not match the grid");
  }
  if (curves[query].values.size() != len) throw Error("query curve does not match the grid");

  const bool query_is_member = std::find(members.begin(), members.end(), query) != members.end();
  const std::size_t sample_size = members.size() + (query_is_member ? 0 : 1);
  const auto& kern = simd::active_kernels();
  const std::span<const double> x = curves[query].values;

  double total = 0.0;
  for (int j = 2; j <= params.J; ++j) {
    const auto k = static_cast<std::size_t>(j);
    const std::size_t m = members.size();
    std::uint64_t count = 0;
    if (m >= k) {
      std::vector<std::size_t> combo(k);
      for (std::size_t p = 0; p < k; ++p) combo[p] = p;
      EnvelopeStack stack(k, len, params.band_tol());
      std::size_t changed = 0;
      std::uint64_t visited = 0;
      while (changed < k) {
        ++visited;
        stack.rebuild(k, changed, [&](std::size_t p) { return std::span<const double>(curves[members[combo[p]]].values); }, kern);
        bool self = false;
        for (std::size_t c : combo) self = self || members[c] == query;
        if (!self) {
          count += params.relax ? kern.count_inside(stack.lower(), stack.upper(), x)
                                : kern.all_inside(stack.lower(), stack.upper(), x);
        }
        changed = next_combination(combo, m);
      }
      if (visits) *visits += visited;
    }
    total += band_term(count, sample_size, k, params.relax ? len : 1);
  }
  return total;
}

}  // namespace fdepth
