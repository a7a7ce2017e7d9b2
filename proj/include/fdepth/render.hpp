#pragma once

#include <string>
#include <vector>

#include "fdepth/model.hpp"

namespace fdepth {

// All figures are SVG 1.1 on an 800x500 canvas. Numbers are written with
// fixed precision so identical inputs give identical bytes.

// One polyline per curve; highlighted ids in red, the rest gray. Univariate
// samples only.
std::string render_curves(const FunctionalSample& sample, const std::vector<std::string>& highlight_ids,
                          const std::string& title);

struct ScatterStyle {
  enum class Mode { gradient, highlight };
  Mode mode = Mode::gradient;
  std::vector<std::string> highlight_ids;  // highlight mode only
};

// Gradient: depth maps linearly to darkness, deepest darkest. Highlight:
// listed ids in red. d = 3 uses a fixed orthographic projection. `depths`
// must hold an entry for every point id.
std::string render_scatter(const PointCloud& cloud, const DepthResult& depths, const ScatterStyle& style,
                           const std::string& title);

// Cells shaded on [min, max], lightest at min, with 2-decimal annotations.
std::string render_heatmap(const std::vector<std::vector<double>>& matrix, const std::vector<std::string>& labels,
                           const std::string& title);

}  // namespace fdepth
