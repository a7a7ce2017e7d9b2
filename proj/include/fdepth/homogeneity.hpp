#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdepth/model.hpp"

namespace fdepth {

enum class HomogeneityMethod { p1, p2 };

std::string_view to_string(HomogeneityMethod m);
// Accepts "p1" and "p2". "p3"/"p4" are rejected with an explanation.
HomogeneityMethod parse_homogeneity_method(std::string_view name);

struct HomogeneityReport {
  HomogeneityMethod method = HomogeneityMethod::p1;
  double value = 0.0;
  std::string deepest_of_G_id;
  // Only set for p2 (the F baseline uses F's own deepest element).
  std::optional<std::string> deepest_of_F_id;
  DepthParams params;
};

// d_F(g): depth of item g of G within F plus g. Bands and simplices come
// from F only; the normalizer counts |F| + 1 items. A g equal to a member of
// F does not replace it. Honors params.K.
double depth_wrt(const FunctionalSample& G, std::size_t g, const FunctionalSample& F, const DepthParams& params);
double depth_wrt(const PointCloud& G, std::size_t g, const PointCloud& F, const DepthParams& params);

// Member of G maximizing d_F; ties go to the smaller id.
std::pair<std::string, double> deepest_in(const FunctionalSample& G, const FunctionalSample& F,
                                          const DepthParams& params);
std::pair<std::string, double> deepest_in(const PointCloud& G, const PointCloud& F, const DepthParams& params);

// P1(F, G) = d_F(deepest element of G within G).
HomogeneityReport p1(const FunctionalSample& F, const FunctionalSample& G, const DepthParams& params);
HomogeneityReport p1(const PointCloud& F, const PointCloud& G, const DepthParams& params);

// P2(F, G) = |P1(F, G) - P1(F, F)|.
HomogeneityReport p2(const FunctionalSample& F, const FunctionalSample& G, const DepthParams& params);
HomogeneityReport p2(const PointCloud& F, const PointCloud& G, const DepthParams& params);

HomogeneityReport homogeneity(HomogeneityMethod method, const FunctionalSample& F, const FunctionalSample& G,
                              const DepthParams& params);
HomogeneityReport homogeneity(HomogeneityMethod method, const PointCloud& F, const PointCloud& G,
                              const DepthParams& params);

// M[i][j] = method(groups[i], groups[j]). No symmetry is assumed.
std::vector<std::vector<double>> homogeneity_matrix(const std::vector<FunctionalSample>& groups,
                                                    HomogeneityMethod method, const DepthParams& params);
std::vector<std::vector<double>> homogeneity_matrix(const std::vector<PointCloud>& groups,
                                                    HomogeneityMethod method, const DepthParams& params);

}  // namespace fdepth
