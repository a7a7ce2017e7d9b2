#include "fdepth/pointcloud_depth.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fdepth/combinatorics.hpp"
#include "fdepth/error.hpp"
#include "fdepth/simplex.hpp"

namespace fdepth {
namespace {

void require_cloud(const PointCloud& cloud, const DepthParams& params) {
  check_params(params);
  require_valid(validate_pointcloud(cloud, params.deep_check));
  if (cloud.size() > 0 && cloud.dim() == 0) throw Error("points have dimension 0");
}

DepthResult make_result(const PointCloud& cloud, const DepthParams& params, std::string method,
                        const std::vector<double>& depths) {
  DepthResult result;
  result.method = std::move(method);
  result.params = params;
  result.params.progress = nullptr;
  for (std::size_t i = 0; i < cloud.size(); ++i) result.entries.push_back({cloud.id(i), depths[i]});
  return result;
}

// Members plus the query (appended when absent), in that order.
std::vector<std::size_t> sample_of(std::span<const std::size_t> members, std::size_t query) {
  std::vector<std::size_t> sample(members.begin(), members.end());
  if (std::find(sample.begin(), sample.end(), query) == sample.end()) sample.push_back(query);
  return sample;
}

// --- simplicial ---------------------------------------------------------

// Count of subsets of `pool` (excluding any containing `skip`) whose simplex
// contains p.
std::uint64_t count_containing(const PointCloud& cloud, std::span<const std::size_t> pool,
                               std::span<const double> p, std::size_t skip, double tol,
                               std::uint64_t* visits) {
  const std::size_t d = cloud.dim();
  const std::size_t k = d + 1;
  if (pool.size() < k) return 0;
  std::vector<std::size_t> combo(k);
  for (std::size_t q = 0; q < k; ++q) combo[q] = q;
  SimplexSolver solver(d);
  std::uint64_t count = 0;
  std::uint64_t visited = 0;
  for (std::size_t changed = 0; changed < k; changed = next_combination(combo, pool.size())) {
    ++visited;
    bool self = false;
    for (std::size_t c : combo) self = self || pool[c] == skip;
    if (self) continue;
    for (std::size_t q = 0; q < k; ++q) solver.set_vertex(q, cloud.point(pool[combo[q]]));
    solver.factor();
    count += solver.contains(p, tol);
  }
  if (visits) *visits += visited;
  return count;
}

// --- mahalanobis --------------------------------------------------------

struct GaussianFit {
  std::vector<double> mean;
  std::vector<double> lu;  // factored (regularized) covariance
  std::vector<std::size_t> perm;
  bool singular_zero = false;  // every point identical
};

bool lu_factor(std::vector<double>& a, std::vector<std::size_t>& perm, std::size_t n, double& min_pivot) {
  perm.resize(n);
  for (std::size_t r = 0; r < n; ++r) perm[r] = r;
  min_pivot = INFINITY;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(a[r * n + k]) > std::abs(a[piv * n + k])) piv = r;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
      std::swap(perm[k], perm[piv]);
    }
    const double pivot = a[k * n + k];
    min_pivot = std::min(min_pivot, std::abs(pivot));
    if (pivot == 0.0) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a[r * n + k] / pivot;
      a[r * n + k] = f;
      for (std::size_t c = k + 1; c < n; ++c) a[r * n + c] -= f * a[k * n + c];
    }
  }
  return true;
}

std::vector<double> lu_solve(const std::vector<double>& lu, const std::vector<std::size_t>& perm,
                             std::span<const double> b) {
  const std::size_t n = perm.size();
  std::vector<double> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = b[perm[r]];
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) x[r] -= lu[r * n + c] * x[c];
  for (std::size_t r = n; r-- > 0;) {
    for (std::size_t c = r + 1; c < n; ++c) x[r] -= lu[r * n + c] * x[c];
    x[r] /= lu[r * n + r];
  }
  return x;
}

GaussianFit fit_gaussian(const PointCloud& cloud, std::span<const std::size_t> sample) {
  const std::size_t d = cloud.dim();
  const std::size_t m = sample.size();
  if (m < 2) throw Error("mahalanobis depth needs at least 2 points");
  GaussianFit fit;
  fit.mean.assign(d, 0.0);
  for (std::size_t i : sample)
    for (std::size_t k = 0; k < d; ++k) fit.mean[k] += cloud.point(i)[k];
  for (double& v : fit.mean) v /= static_cast<double>(m);

  std::vector<double> cov(d * d, 0.0);
  for (std::size_t i : sample) {
    const auto p = cloud.point(i);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) cov[r * d + c] += (p[r] - fit.mean[r]) * (p[c] - fit.mean[c]);
  }
  for (double& v : cov) v /= static_cast<double>(m - 1);

  double trace = 0.0;
  for (std::size_t k = 0; k < d; ++k) trace += cov[k * d + k];
  if (trace == 0.0) {
    fit.singular_zero = true;
    return fit;
  }
  const double floor = 1e-12 * trace / static_cast<double>(d);
  fit.lu = cov;
  double min_pivot = 0.0;
  const bool ok = lu_factor(fit.lu, fit.perm, d, min_pivot);
  if (!ok || min_pivot < floor) {
    fit.lu = cov;
    for (std::size_t k = 0; k < d; ++k) fit.lu[k * d + k] += floor;
    lu_factor(fit.lu, fit.perm, d, min_pivot);
  }
  return fit;
}

double mahalanobis_from_fit(const GaussianFit& fit, std::span<const double> p) {
  const std::size_t d = fit.mean.size();
  std::vector<double> diff(d);
  bool at_mean = true;
  for (std::size_t k = 0; k < d; ++k) {
    diff[k] = p[k] - fit.mean[k];
    at_mean = at_mean && diff[k] == 0.0;
  }
  if (at_mean) return 1.0;
  if (fit.singular_zero) return 0.0;
  const auto y = lu_solve(fit.lu, fit.perm, diff);
  double q = 0.0;
  for (std::size_t k = 0; k < d; ++k) q += diff[k] * y[k];
  return 1.0 / (1.0 + std::max(q, 0.0));
}

// --- l1 / oja -----------------------------------------------------------

double l1_from(std::span<const double> x, const PointCloud& cloud, std::span<const std::size_t> others) {
  const std::size_t d = x.size();
  if (others.empty()) throw Error("l1 depth needs at least 2 points");
  std::vector<double> sum(d, 0.0);
  std::vector<double> diff(d);
  for (std::size_t i : others) {
    const auto y = cloud.point(i);
    double norm = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      diff[k] = y[k] - x[k];
      norm += diff[k] * diff[k];
    }
    norm = std::sqrt(norm);
    if (norm < 1e-12) continue;
    for (std::size_t k = 0; k < d; ++k) sum[k] += diff[k] / norm;
  }
  double len = 0.0;
  for (double v : sum) {
    const double mv = v / static_cast<double>(others.size());
    len += mv * mv;
  }
  return std::clamp(1.0 - std::sqrt(len), 0.0, 1.0);
}

double oja_from(std::span<const double> x, const PointCloud& cloud, std::span<const std::size_t> others) {
  const std::size_t d = x.size();
  if (others.size() < d) throw Error("oja depth needs at least d + 1 = " + std::to_string(d + 1) + " points");
  std::vector<std::size_t> combo(d);
  for (std::size_t q = 0; q < d; ++q) combo[q] = q;
  std::vector<std::span<const double>> verts(d + 1);
  verts[0] = x;
  double total = 0.0;
  std::uint64_t subsets = 0;
  for (std::size_t changed = 0; changed < d; changed = next_combination(combo, others.size())) {
    for (std::size_t q = 0; q < d; ++q) verts[q + 1] = cloud.point(others[combo[q]]);
    total += simplex_volume(verts);
    ++subsets;
  }
  return 1.0 / (1.0 + total / static_cast<double>(subsets));
}

std::vector<std::size_t> others_of(std::span<const std::size_t> sample, std::size_t query) {
  std::vector<std::size_t> out;
  out.reserve(sample.size());
  for (std::size_t i : sample)
    if (i != query) out.push_back(i);
  return out;
}

std::vector<std::size_t> all_indices(std::size_t m) {
  std::vector<std::size_t> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = i;
  return v;
}

// Per-point map with a deterministic slot per point.
template <class Fn>
std::vector<double> per_point(std::size_t m, const DepthParams& params, Fn&& fn) {
  std::vector<double> out(m);
  const ChunkPlan plan = plan_chunks(m);
  run_chunks(
      plan, params.threads,
      [&](std::size_t chunk, unsigned) {
        for (std::uint64_t i = plan.begin(chunk); i < plan.end(chunk); ++i) out[i] = fn(static_cast<std::size_t>(i));
      },
      params.progress);
  return out;
}

}  // namespace

DepthResult simplicial_depth(const PointCloud& cloud, const DepthParams& params) {
  require_cloud(cloud, params);
  const std::size_t m = cloud.size();
  const std::size_t d = cloud.dim();
  const std::size_t k = d + 1;
  if (m < d + 2)
    throw Error("simplicial depth needs at least d + 2 = " + std::to_string(d + 2) + " points, got " +
                std::to_string(m));

  const ChunkPlan plan = plan_chunks(binomial(m, k));
  const unsigned workers = resolve_threads(params.threads);
  std::vector<std::vector<std::uint64_t>> acc(workers, std::vector<std::uint64_t>(m, 0));
  std::vector<std::uint64_t> nondegenerate(workers, 0);
  const double tol = params.simplex_tol();

  run_chunks(
      plan, params.threads,
      [&](std::size_t chunk, unsigned worker) {
        auto combo = unrank_combination(m, k, plan.begin(chunk));
        std::vector<char> member(m, 0);
        SimplexSolver solver(d);
        for (std::uint64_t r = plan.begin(chunk); r < plan.end(chunk); ++r) {
          for (std::size_t q = 0; q < k; ++q) solver.set_vertex(q, cloud.point(combo[q]));
          solver.factor();
          nondegenerate[worker] += !solver.degenerate();
          for (std::size_t c : combo) member[c] = 1;
          for (std::size_t i = 0; i < m; ++i)
            if (!member[i]) acc[worker][i] += solver.contains(cloud.point(i), tol);
          for (std::size_t c : combo) member[c] = 0;
          next_combination(combo, m);
        }
      },
      params.progress);

  std::vector<std::uint64_t> counts(m, 0);
  std::uint64_t usable = 0;
  for (unsigned w = 0; w < workers; ++w) {
    usable += nondegenerate[w];
    for (std::size_t i = 0; i < m; ++i) counts[i] += acc[w][i];
  }
  const double denom = static_cast<double>(binomial(m, k));
  std::vector<double> depths(m);
  for (std::size_t i = 0; i < m; ++i) depths[i] = static_cast<double>(counts[i]) / denom;
  auto result = make_result(cloud, params, "simplicial_depth", depths);
  result.degenerate = usable == 0;
  return result;
}

double simplicial_depth_of(std::span<const double> p, const PointCloud& cloud, const DepthParams& params) {
  require_cloud(cloud, params);
  const std::size_t d = cloud.dim();
  if (p.size() != d) throw Error("query point dimension does not match the cloud");
  if (cloud.size() < d + 1) throw Error("simplicial depth needs at least d + 1 points");
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto q = cloud.point(i);
    if (!std::equal(q.begin(), q.end(), p.begin())) pool.push_back(i);
  }
  const std::uint64_t count = count_containing(cloud, pool, p, cloud.size(), params.simplex_tol(), nullptr);
  return static_cast<double>(count) / static_cast<double>(binomial(cloud.size(), d + 1));
}

DepthResult mahalanobis_depth(const PointCloud& cloud, const DepthParams& params) {
  require_cloud(cloud, params);
  const auto all = all_indices(cloud.size());
  const GaussianFit fit = fit_gaussian(cloud, all);
  std::vector<double> depths(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) depths[i] = mahalanobis_from_fit(fit, cloud.point(i));
  return make_result(cloud, params, "mahalanobis_depth", depths);
}

double mahalanobis_depth_of(std::span<const double> p, const PointCloud& cloud) {
  if (p.size() != cloud.dim()) throw Error("query point dimension does not match the cloud");
  return mahalanobis_from_fit(fit_gaussian(cloud, all_indices(cloud.size())), p);
}

DepthResult l1_depth(const PointCloud& cloud, const DepthParams& params) {
  require_cloud(cloud, params);
  if (cloud.size() < 2) throw Error("l1 depth needs at least 2 points");
  const auto all = all_indices(cloud.size());
  auto depths = per_point(cloud.size(), params,
                          [&](std::size_t i) { return l1_from(cloud.point(i), cloud, others_of(all, i)); });
  return make_result(cloud, params, "l1_depth", depths);
}

double l1_depth_of(std::span<const double> p, const PointCloud& cloud) {
  if (p.size() != cloud.dim()) throw Error("query point dimension does not match the cloud");
  return l1_from(p, cloud, all_indices(cloud.size()));
}

DepthResult oja_depth(const PointCloud& cloud, const DepthParams& params) {
  require_cloud(cloud, params);
  const std::size_t d = cloud.dim();
  if (cloud.size() < d + 1)
    throw Error("oja depth needs at least d + 1 = " + std::to_string(d + 1) + " points");
  const auto all = all_indices(cloud.size());
  auto depths = per_point(cloud.size(), params,
                          [&](std::size_t i) { return oja_from(cloud.point(i), cloud, others_of(all, i)); });
  return make_result(cloud, params, "oja_depth", depths);
}

DepthResult pointcloud_depth(const PointCloud& cloud, const DepthParams& params) {
  switch (params.containment) {
    case Containment::simplex: return simplicial_depth(cloud, params);
    case Containment::oja: return oja_depth(cloud, params);
    case Containment::mahalanobis: return mahalanobis_depth(cloud, params);
    case Containment::l1: return l1_depth(cloud, params);
    case Containment::r2: break;
  }
  throw Error("containment 'r2' applies to functional data; use simplex, oja, mahalanobis or l1 for point clouds");
}

double pointcloud_depth_within(const PointCloud& cloud, std::span<const std::size_t> members,
                               std::size_t query, const DepthParams& params, std::uint64_t* visits) {
  check_params(params);
  if (query >= cloud.size()) throw Error("query index out of range");
  for (std::size_t i : members)
    if (i >= cloud.size()) throw Error("member index out of range");
  const std::size_t d = cloud.dim();
  const auto sample = sample_of(members, query);
  switch (params.containment) {
    case Containment::simplex: {
      const std::uint64_t count =
          count_containing(cloud, members, cloud.point(query), query, params.simplex_tol(), visits);
      return static_cast<double>(count) / static_cast<double>(binomial(sample.size(), d + 1));
    }
    case Containment::mahalanobis:
      return mahalanobis_from_fit(fit_gaussian(cloud, sample), cloud.point(query));
    case Containment::l1:
      return l1_from(cloud.point(query), cloud, others_of(sample, query));
    case Containment::oja:
      return oja_from(cloud.point(query), cloud, others_of(sample, query));
    case Containment::r2: break;
  }
  throw Error("containment 'r2' applies to functional data");
}

}  // namespace fdepth
