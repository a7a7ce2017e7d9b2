#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "fdepth/model.hpp"

namespace fdepth {

// A univariate sample viewed as multivariate curves of dimension 1.
FunctionalSample as_multivariate(const FunctionalSample& sample);

// Simplicial band depth (relax = false) or modified simplicial band depth
// (relax = true) of every curve. Each (d+1)-subset of the other curves is
// tested time point by time point: strict mode scores it when the curve lies
// in the subset's simplex at every time, relaxed mode scores the fraction of
// times it does. Scores are divided by C(n, d+1). J is not used.
// Univariate samples are treated as d = 1. Requires n >= d + 2.
DepthResult simplicial_band_depth(const FunctionalSample& sample, const DepthParams& params);

// Depth of curve `query` within `members` plus `query`; see band_depth_within.
double simplicial_band_depth_within(const FunctionalSample& sample, std::span<const std::size_t> members,
                                    std::size_t query, const DepthParams& params,
                                    std::uint64_t* visits = nullptr);

}  // namespace fdepth
