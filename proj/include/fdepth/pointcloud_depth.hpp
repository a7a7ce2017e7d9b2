#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "fdepth/model.hpp"

namespace fdepth {

// Simplicial depth of every point: the number of (d+1)-subsets of the
// other points whose simplex contains it, over C(m, d+1). Requires
// m >= d + 2. Sets DepthResult::degenerate when every simplex is
// degenerate.
DepthResult simplicial_depth(const PointCloud& cloud, const DepthParams& params);

// Simplicial depth of an arbitrary query point over all C(m, d+1) subsets
// of the cloud. Cloud members equal to p are left out of the simplices.
double simplicial_depth_of(std::span<const double> p, const PointCloud& cloud, const DepthParams& params);

// The following depths are named after the usual literature definitions:
//   mahalanobis  1 / (1 + (x - mu)' S^-1 (x - mu)), sample covariance S (m - 1 divisor)
//   l1 (spatial) 1 - |mean over y != x of (y - x) / |y - x||
//   oja          1 / (1 + mean volume of simplices of x with d other points)
DepthResult mahalanobis_depth(const PointCloud& cloud, const DepthParams& params = {});
DepthResult l1_depth(const PointCloud& cloud, const DepthParams& params = {});
DepthResult oja_depth(const PointCloud& cloud, const DepthParams& params = {});

double mahalanobis_depth_of(std::span<const double> p, const PointCloud& cloud);
double l1_depth_of(std::span<const double> p, const PointCloud& cloud);

// Dispatch on params.containment (simplex, oja, mahalanobis, l1).
DepthResult pointcloud_depth(const PointCloud& cloud, const DepthParams& params);

// Depth of point `query` within the sample formed by `members` plus
// `query`, under params.containment. If `query` is listed in `members` it
// is not duplicated. For simplicial depth, `visits` counts the member
// subsets enumerated.
double pointcloud_depth_within(const PointCloud& cloud, std::span<const std::size_t> members,
                               std::size_t query, const DepthParams& params,
                               std::uint64_t* visits = nullptr);

}  // namespace fdepth
