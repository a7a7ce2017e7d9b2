#include "fdepth/multivariate_depth.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "fdepth/band_depth.hpp"
#include "fdepth/combinatorics.hpp"
#include "fdepth/error.hpp"
#include "fdepth/simplex.hpp"

namespace fdepth {
namespace {

// Values packed as [curve][time][coordinate]; optionally only a selection
// of the sample's curves, re-indexed 0..k-1.
class CurveTensor {
 public:
  explicit CurveTensor(const FunctionalSample& sample) : CurveTensor(sample, all(sample.size())) {}

  CurveTensor(const FunctionalSample& sample, std::span<const std::size_t> pick)
      : n_(pick.size()), len_(sample.grid().size()), dim_(sample.dim()), data_(n_ * len_ * dim_) {
    const auto& curves = sample.multivariate();
    for (std::size_t i = 0; i < n_; ++i) {
      const auto& c = curves[pick[i]];
      if (c.values.size() != len_) throw Error("curve '" + c.id + "' does not match the grid");
      for (std::size_t t = 0; t < len_; ++t) {
        if (c.values[t].size() != dim_) throw Error("curve '" + c.id + "' has a row of the wrong dimension");
        std::copy(c.values[t].begin(), c.values[t].end(),
                  data_.begin() + static_cast<std::ptrdiff_t>((i * len_ + t) * dim_));
      }
    }
  }

  std::size_t size() const { return n_; }
  std::size_t length() const { return len_; }
  std::size_t dim() const { return dim_; }
  std::span<const double> at(std::size_t i, std::size_t t) const {
    return {data_.data() + (i * len_ + t) * dim_, dim_};
  }

 private:
  static std::vector<std::size_t> all(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
  }

  std::size_t n_, len_, dim_;
  std::vector<double> data_;
};

// Per-time simplices of one curve subset.
class TimeSimplices {
 public:
  TimeSimplices(std::size_t len, std::size_t dim) : solvers_(len, SimplexSolver(dim)) {}

  template <class CurveOf>
  void build(const CurveTensor& x, std::size_t k, CurveOf&& curve_of) {
    for (std::size_t t = 0; t < solvers_.size(); ++t) {
      for (std::size_t q = 0; q < k; ++q) solvers_[t].set_vertex(q, x.at(curve_of(q), t));
      solvers_[t].factor();
    }
  }

  // Strict: 1 if inside at every time. Relaxed: number of times inside.
  std::uint64_t score(const CurveTensor& x, std::size_t i, bool relax, double tol) const {
    std::uint64_t inside = 0;
    for (std::size_t t = 0; t < solvers_.size(); ++t) {
      const bool in = solvers_[t].contains(x.at(i, t), tol);
      if (!relax && !in) return 0;
      inside += in;
    }
    return relax ? inside : 1;
  }

 private:
  std::vector<SimplexSolver> solvers_;
};

FunctionalSample prepare(const FunctionalSample& sample, const DepthParams& params) {
  check_params(params);
  require_valid(validate_functional(sample, params.deep_check));
  return sample.is_multivariate() ? sample : as_multivariate(sample);
}

}  // namespace

FunctionalSample as_multivariate(const FunctionalSample& sample) {
  if (sample.is_multivariate()) return sample;
  std::vector<MultivariateCurve> curves;
  curves.reserve(sample.size());
  for (const auto& c : sample.univariate()) {
    MultivariateCurve mc{c.id, {}};
    mc.values.reserve(c.values.size());
    for (double v : c.values) mc.values.push_back({v});
    curves.push_back(std::move(mc));
  }
  return FunctionalSample(sample.grid(), std::move(curves));
}

DepthResult simplicial_band_depth(const FunctionalSample& input, const DepthParams& params) {
  const FunctionalSample sample = prepare(input, params);
  const CurveTensor x(sample);
  const std::size_t n = x.size();
  const std::size_t d = x.dim();
  const std::size_t len = x.length();
  const std::size_t k = d + 1;
  if (n < d + 2)
    throw Error("simplicial band depth needs at least d + 2 = " + std::to_string(d + 2) + " curves, got " +
                std::to_string(n));

  const ChunkPlan plan = plan_chunks(binomial(n, k));
  const unsigned workers = resolve_threads(params.threads);
  std::vector<std::vector<std::uint64_t>> acc(workers, std::vector<std::uint64_t>(n, 0));
  const double tol = params.simplex_tol();

  run_chunks(
      plan, params.threads,
      [&](std::size_t chunk, unsigned worker) {
        auto combo = unrank_combination(n, k, plan.begin(chunk));
        std::vector<char> member(n, 0);
        TimeSimplices simplices(len, d);
        for (std::uint64_t r = plan.begin(chunk); r < plan.end(chunk); ++r) {
          simplices.build(x, k, [&](std::size_t q) { return combo[q]; });
          for (std::size_t c : combo) member[c] = 1;
          for (std::size_t i = 0; i < n; ++i)
            if (!member[i]) acc[worker][i] += simplices.score(x, i, params.relax, tol);
          for (std::size_t c : combo) member[c] = 0;
          next_combination(combo, n);
        }
      },
      params.progress);

  DepthResult result;
  result.method = params.relax ? "modified_simplicial_band_depth" : "simplicial_band_depth";
  result.params = params;
  result.params.progress = nullptr;
  const std::size_t divisor = params.relax ? len : 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t count = 0;
    for (unsigned w = 0; w < workers; ++w) count += acc[w][i];
    result.entries.push_back({sample.id(i), band_term(count, n, k, divisor)});
  }
  return result;
}

double simplicial_band_depth_within(const FunctionalSample& input, std::span<const std::size_t> members,
                                    std::size_t query, const DepthParams& params, std::uint64_t* visits) {
  check_params(params);
  const FunctionalSample sample = input.is_multivariate() ? input : as_multivariate(input);
  if (query >= sample.size()) throw Error("query index out of range");
  for (std::size_t i : members)
    if (i >= sample.size()) throw Error("member index out of range");
  const bool query_is_member = std::find(members.begin(), members.end(), query) != members.end();
  const std::size_t sample_size = members.size() + (query_is_member ? 0 : 1);

  // Row 0 is the query, rows 1.. are the members in order.
  std::vector<std::size_t> pick;
  pick.reserve(members.size() + 1);
  pick.push_back(query);
  pick.insert(pick.end(), members.begin(), members.end());
  const CurveTensor x(sample, pick);
  const std::size_t d = x.dim();
  const std::size_t k = d + 1;
  const std::size_t len = x.length();

  std::uint64_t count = 0;
  if (members.size() >= k) {
    std::vector<std::size_t> combo(k);
    for (std::size_t q = 0; q < k; ++q) combo[q] = q;
    TimeSimplices simplices(len, d);
    std::uint64_t visited = 0;
    for (std::size_t changed = 0; changed < k; changed = next_combination(combo, members.size())) {
      ++visited;
      bool self = false;
      for (std::size_t c : combo) self = self || members[c] == query;
      if (self) continue;
      simplices.build(x, k, [&](std::size_t q) { return combo[q] + 1; });
      count += simplices.score(x, 0, params.relax, params.simplex_tol());
    }
    if (visits) *visits += visited;
  }
  return band_term(count, sample_size, k, params.relax ? len : 1);
}

}  // namespace fdepth
