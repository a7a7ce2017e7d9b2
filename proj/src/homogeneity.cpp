#include "fdepth/homogeneity.hpp"

#include <cmath>
#include <numeric>

#include "fdepth/depth.hpp"
#include "fdepth/error.hpp"
#include "fdepth/resampling.hpp"

namespace fdepth {
namespace {

void require_compatible(const FunctionalSample& a, const FunctionalSample& b) {
  if (a.is_multivariate() != b.is_multivariate())
    throw Error("cannot compare a univariate sample with a multivariate one");
  if (a.grid().size() != b.grid().size())
    throw Error("samples have different grid lengths (" + std::to_string(a.grid().size()) + " vs " +
                std::to_string(b.grid().size()) + ")");
  if (a.dim() != b.dim()) throw Error("samples have different dimensions");
}

void require_compatible(const PointCloud& a, const PointCloud& b) {
  if (a.dim() != b.dim()) throw Error("point clouds have different dimensions");
}

template <class Sample>
double depth_wrt_impl(const Sample& G, std::size_t g, const Sample& F, const DepthParams& params) {
  if (g >= G.size()) throw Error("item index out of range");
  require_compatible(F, G);
  const Sample combined = F.concat(G.subset(std::span<const std::size_t>(&g, 1)));
  const auto kernel = make_kernel(combined, params);
  const std::size_t query = F.size();
  std::vector<std::size_t> members(F.size());
  std::iota(members.begin(), members.end(), std::size_t{0});
  if (!params.K) return kernel->depth_within(members, query);
  members.push_back(query);
  return resampled_depth(*kernel, members, query, *params.K, params.seed_or_default());
}

// Argmax with ties broken by the smaller id.
std::size_t argmax_by_id(const std::vector<double>& depths, const auto& sample) {
  if (depths.empty()) throw Error("cannot pick the deepest element of an empty sample");
  std::size_t best = 0;
  for (std::size_t i = 1; i < depths.size(); ++i) {
    if (depths[i] > depths[best] || (depths[i] == depths[best] && sample.id(i) < sample.id(best))) best = i;
  }
  return best;
}

template <class Sample>
std::pair<std::string, double> deepest_in_impl(const Sample& G, const Sample& F, const DepthParams& params) {
  if (G.size() == 0) throw Error("G is empty");
  std::vector<double> depths(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) depths[i] = depth_wrt_impl(G, i, F, params);
  const std::size_t best = argmax_by_id(depths, G);
  return {G.id(best), depths[best]};
}

template <class Sample>
std::size_t within_deepest(const Sample& S, const DepthParams& params) {
  const auto kernel = make_kernel(S, params);
  return argmax_by_id(kernel_depths(*kernel, params), S);
}

DepthParams echo(const DepthParams& params) {
  DepthParams p = params;
  p.progress = nullptr;
  if (p.K) p.seed = p.seed_or_default();
  return p;
}

template <class Sample>
HomogeneityReport p1_impl(const Sample& F, const Sample& G, const DepthParams& params) {
  require_compatible(F, G);
  const std::size_t g = within_deepest(G, params);
  HomogeneityReport report;
  report.method = HomogeneityMethod::p1;
  report.value = depth_wrt_impl(G, g, F, params);
  report.deepest_of_G_id = G.id(g);
  report.params = echo(params);
  return report;
}

template <class Sample>
HomogeneityReport p2_impl(const Sample& F, const Sample& G, const DepthParams& params) {
  const HomogeneityReport fg = p1_impl(F, G, params);
  const HomogeneityReport ff = p1_impl(F, F, params);
  HomogeneityReport report = fg;
  report.method = HomogeneityMethod::p2;
  report.value = std::abs(fg.value - ff.value);
  report.deepest_of_F_id = ff.deepest_of_G_id;
  return report;
}

template <class Sample>
HomogeneityReport dispatch(HomogeneityMethod method, const Sample& F, const Sample& G, const DepthParams& params) {
  return method == HomogeneityMethod::p1 ? p1_impl(F, G, params) : p2_impl(F, G, params);
}

template <class Sample>
std::vector<std::vector<double>> matrix_impl(const std::vector<Sample>& groups, HomogeneityMethod method,
                                             const DepthParams& params) {
  if (groups.size() < 2) throw Error("a homogeneity matrix needs at least 2 groups");
  const std::size_t g = groups.size();
  std::vector<std::vector<double>> m(g, std::vector<double>(g, 0.0));
  DepthParams inner = params;
  inner.progress = nullptr;
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      m[i][j] = dispatch(method, groups[i], groups[j], inner).value;
      if (params.progress) params.progress(static_cast<double>(i * g + j + 1) / static_cast<double>(g * g));
    }
  }
  return m;
}

DepthParams quiet_inner(const DepthParams& params) {
  DepthParams p = params;
  p.progress = nullptr;
  return p;
}

}  // namespace

std::string_view to_string(HomogeneityMethod m) { return m == HomogeneityMethod::p1 ? "p1" : "p2"; }

HomogeneityMethod parse_homogeneity_method(std::string_view name) {
  if (name == "p1") return HomogeneityMethod::p1;
  if (name == "p2") return HomogeneityMethod::p2;
  if (name == "p3" || name == "p4")
    throw Error("homogeneity coefficient '" + std::string(name) +
                "' is not supported: P3 and P4 are defined in Flores, Lillo and Romo (2018) and are not "
                "implemented here; use p1 or p2");
  throw Error("unknown homogeneity method '" + std::string(name) + "' (valid: p1, p2)");
}

double depth_wrt(const FunctionalSample& G, std::size_t g, const FunctionalSample& F, const DepthParams& params) {
  return depth_wrt_impl(G, g, F, quiet_inner(params));
}
double depth_wrt(const PointCloud& G, std::size_t g, const PointCloud& F, const DepthParams& params) {
  return depth_wrt_impl(G, g, F, quiet_inner(params));
}

std::pair<std::string, double> deepest_in(const FunctionalSample& G, const FunctionalSample& F,
                                          const DepthParams& params) {
  return deepest_in_impl(G, F, quiet_inner(params));
}
std::pair<std::string, double> deepest_in(const PointCloud& G, const PointCloud& F, const DepthParams& params) {
  return deepest_in_impl(G, F, quiet_inner(params));
}

HomogeneityReport p1(const FunctionalSample& F, const FunctionalSample& G, const DepthParams& params) {
  return p1_impl(F, G, quiet_inner(params));
}
HomogeneityReport p1(const PointCloud& F, const PointCloud& G, const DepthParams& params) {
  return p1_impl(F, G, quiet_inner(params));
}
HomogeneityReport p2(const FunctionalSample& F, const FunctionalSample& G, const DepthParams& params) {
  return p2_impl(F, G, quiet_inner(params));
}
HomogeneityReport p2(const PointCloud& F, const PointCloud& G, const DepthParams& params) {
  return p2_impl(F, G, quiet_inner(params));
}

HomogeneityReport homogeneity(HomogeneityMethod method, const FunctionalSample& F, const FunctionalSample& G,
                              const DepthParams& params) {
  return dispatch(method, F, G, quiet_inner(params));
}
HomogeneityReport homogeneity(HomogeneityMethod method, const PointCloud& F, const PointCloud& G,
                              const DepthParams& params) {
  return dispatch(method, F, G, quiet_inner(params));
}

std::vector<std::vector<double>> homogeneity_matrix(const std::vector<FunctionalSample>& groups,
                                                    HomogeneityMethod method, const DepthParams& params) {
  return matrix_impl(groups, method, params);
}
std::vector<std::vector<double>> homogeneity_matrix(const std::vector<PointCloud>& groups,
                                                    HomogeneityMethod method, const DepthParams& params) {
  return matrix_impl(groups, method, params);
}

}  // namespace fdepth
