#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fdepth/model.hpp"

namespace fdepth {

// A depth measure bound to one sample. Items are addressed by index.
class DepthKernel {
 public:
  virtual ~DepthKernel() = default;

  virtual std::size_t size() const = 0;
  virtual const std::string& id(std::size_t i) const = 0;
  virtual std::string method() const = 0;
  // Smallest sample, query included, on which the measure is defined.
  virtual std::size_t min_sample_size() const = 0;

  // Exact depth of every item within the whole sample.
  virtual std::vector<double> depth_all() const = 0;

  // Depth of `query` within `members` plus `query`. Subsets that include
  // the query never count towards it. `visits`, when set, accumulates the
  // number of member subsets enumerated (subset-based measures only).
  virtual double depth_within(std::span<const std::size_t> members, std::size_t query,
                              std::uint64_t* visits = nullptr) const = 0;
};

// Univariate samples with containment r2 use (modified) band depth; any
// multivariate sample, or containment simplex, uses (modified) simplicial
// band depth. Other containments are rejected.
std::unique_ptr<DepthKernel> make_kernel(FunctionalSample sample, const DepthParams& params);
std::unique_ptr<DepthKernel> make_kernel(PointCloud cloud, const DepthParams& params);

// Exact depth when params.K is absent, block-resampled depth otherwise.
DepthResult compute_depth(const FunctionalSample& sample, const DepthParams& params);
DepthResult compute_depth(const PointCloud& cloud, const DepthParams& params);

// Depth of every item of an existing kernel, honoring params.K.
std::vector<double> kernel_depths(const DepthKernel& kernel, const DepthParams& params);

}  // namespace fdepth
