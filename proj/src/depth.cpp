#include "fdepth/depth.hpp"

#include <string>

#include "fdepth/band_depth.hpp"
#include "fdepth/error.hpp"
#include "fdepth/multivariate_depth.hpp"
#include "fdepth/pointcloud_depth.hpp"
#include "fdepth/resampling.hpp"

namespace fdepth {
namespace {

std::vector<double> values_of(const DepthResult& r) {
  std::vector<double> out;
  out.reserve(r.entries.size());
  for (const auto& e : r.entries) out.push_back(e.depth);
  return out;
}

class BandKernel final : public DepthKernel {
 public:
  BandKernel(FunctionalSample sample, const DepthParams& params) : sample_(std::move(sample)), params_(params) {
    params_.progress = nullptr;
  }

  std::size_t size() const override { return sample_.size(); }
  const std::string& id(std::size_t i) const override { return sample_.id(i); }
  std::string method() const override { return params_.relax ? "modified_band_depth" : "band_depth"; }
  std::size_t min_sample_size() const override { return static_cast<std::size_t>(params_.J) + 1; }
  std::vector<double> depth_all() const override { return values_of(band_depth(sample_, params_)); }
  double depth_within(std::span<const std::size_t> members, std::size_t query,
                      std::uint64_t* visits) const override {
    return band_depth_within(sample_, members, query, params_, visits);
  }

 private:
  FunctionalSample sample_;
  DepthParams params_;
};

class SimplicialBandKernel final : public DepthKernel {
 public:
  SimplicialBandKernel(FunctionalSample sample, const DepthParams& params)
      : sample_(as_multivariate(sample)), params_(params) {
    params_.progress = nullptr;
  }

  std::size_t size() const override { return sample_.size(); }
  const std::string& id(std::size_t i) const override { return sample_.id(i); }
  std::string method() const override {
    return params_.relax ? "modified_simplicial_band_depth" : "simplicial_band_depth";
  }
  std::size_t min_sample_size() const override { return sample_.dim() + 2; }
  std::vector<double> depth_all() const override { return values_of(simplicial_band_depth(sample_, params_)); }
  double depth_within(std::span<const std::size_t> members, std::size_t query,
                      std::uint64_t* visits) const override {
    return simplicial_band_depth_within(sample_, members, query, params_, visits);
  }

 private:
  FunctionalSample sample_;
  DepthParams params_;
};

class CloudKernel final : public DepthKernel {
 public:
  CloudKernel(PointCloud cloud, const DepthParams& params) : cloud_(std::move(cloud)), params_(params) {
    params_.progress = nullptr;
  }

  std::size_t size() const override { return cloud_.size(); }
  const std::string& id(std::size_t i) const override { return cloud_.id(i); }
  std::string method() const override {
    return params_.containment == Containment::simplex ? "simplicial_depth"
                                                       : std::string(to_string(params_.containment)) + "_depth";
  }
  std::size_t min_sample_size() const override {
    switch (params_.containment) {
      case Containment::simplex: return cloud_.dim() + 2;
      case Containment::oja: return cloud_.dim() + 1;
      default: return 2;
    }
  }
  std::vector<double> depth_all() const override { return values_of(pointcloud_depth(cloud_, params_)); }
  double depth_within(std::span<const std::size_t> members, std::size_t query,
                      std::uint64_t* visits) const override {
    return pointcloud_depth_within(cloud_, members, query, params_, visits);
  }

 private:
  PointCloud cloud_;
  DepthParams params_;
};

template <class Sample>
DepthResult finish(const DepthKernel& kernel, const Sample& sample, const DepthParams& params, std::string method) {
  DepthResult result;
  result.method = std::move(method);
  result.params = params;
  result.params.progress = nullptr;
  if (params.K) result.params.seed = params.seed_or_default();
  const auto depths = kernel_depths(kernel, params);
  for (std::size_t i = 0; i < sample.size(); ++i) result.entries.push_back({sample.id(i), depths[i]});
  return result;
}

}  // namespace

std::unique_ptr<DepthKernel> make_kernel(FunctionalSample sample, const DepthParams& params) {
  check_params(params);
  switch (params.containment) {
    case Containment::r2:
      if (!sample.is_multivariate()) return std::make_unique<BandKernel>(std::move(sample), params);
      [[fallthrough]];
    case Containment::simplex:
      return std::make_unique<SimplicialBandKernel>(std::move(sample), params);
    default:
      throw Error("containment '" + std::string(to_string(params.containment)) +
                  "' applies to point clouds; functional data takes r2 or simplex");
  }
}

std::unique_ptr<DepthKernel> make_kernel(PointCloud cloud, const DepthParams& params) {
  check_params(params);
  if (params.containment == Containment::r2)
    throw Error("containment 'r2' applies to functional data; use simplex, oja, mahalanobis or l1 for point clouds");
  return std::make_unique<CloudKernel>(std::move(cloud), params);
}

std::vector<double> kernel_depths(const DepthKernel& kernel, const DepthParams& params) {
  return params.K ? resampled_depths(kernel, params) : kernel.depth_all();
}

DepthResult compute_depth(const FunctionalSample& sample, const DepthParams& params) {
  require_valid(validate_functional(sample, params.deep_check));
  if (!params.K) {
    if (params.containment == Containment::r2 && !sample.is_multivariate()) return band_depth(sample, params);
    if (params.containment == Containment::r2 || params.containment == Containment::simplex)
      return simplicial_band_depth(sample, params);
  }
  const auto kernel = make_kernel(sample, params);
  return finish(*kernel, sample, params, kernel->method());
}

DepthResult compute_depth(const PointCloud& cloud, const DepthParams& params) {
  require_valid(validate_pointcloud(cloud, params.deep_check));
  if (!params.K) return pointcloud_depth(cloud, params);
  const auto kernel = make_kernel(cloud, params);
  return finish(*kernel, cloud, params, kernel->method());
}

}  // namespace fdepth
