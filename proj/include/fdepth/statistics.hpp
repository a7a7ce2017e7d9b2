#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fdepth/model.hpp"

namespace fdepth {

// Descending depth, ties by ascending id.
std::vector<DepthEntry> ordered(const DepthResult& result);

// First n of ordered(). Entries tied with the n-th are included too, so the
// result can hold more than n entries. n = 1 gives the median.
std::vector<DepthEntry> deepest(const DepthResult& result, std::size_t n = 1);

// The n least deep, ascending depth then ascending id, expanded over ties
// at the boundary.
std::vector<DepthEntry> outlying(const DepthResult& result, std::size_t n = 1);

// Ids of the ceil(fraction * count) deepest entries, tie-expanded.
std::vector<std::string> central_region(const DepthResult& result, double fraction = 0.5);

// Sample without outlying(result, n). n = 0 returns the sample unchanged.
FunctionalSample drop_outlying_data(const FunctionalSample& sample, const DepthResult& result, std::size_t n);
PointCloud drop_outlying_data(const PointCloud& cloud, const DepthResult& result, std::size_t n);

// Sub-sample holding deepest(result, n), in input order.
FunctionalSample get_deepest_data(const FunctionalSample& sample, const DepthResult& result, std::size_t n);
PointCloud get_deepest_data(const PointCloud& cloud, const DepthResult& result, std::size_t n);

}  // namespace fdepth
