#pragma once

#include <random>
#include <string>
#include <vector>

#include "fdepth/model.hpp"

namespace fixtures {

// The six curves of the worked band depth example.
inline std::vector<std::vector<double>> six_curves_values() {
  return {{1, 2, 3, 2, 1}, {2, 4, 5, 6, 2}, {3, 4, 4, 2, 1},
          {6, 7, 6.5, 6, 7}, {9, 9, 12, 11, 11}, {8, 8, 10, 10, 9}};
}

inline fdepth::FunctionalSample univariate(const std::vector<std::vector<double>>& values,
                                           const std::string& prefix = "f_") {
  std::vector<fdepth::Curve> curves;
  for (std::size_t i = 0; i < values.size(); ++i) curves.push_back({prefix + std::to_string(i), values[i]});
  return fdepth::FunctionalSample(fdepth::TimeGrid::indices(values.empty() ? 0 : values[0].size()),
                                  std::move(curves));
}

inline fdepth::FunctionalSample six_curves() { return univariate(six_curves_values()); }

inline const char* six_curves_csv() {
  return ",f_0,f_1,f_2,f_3,f_4,f_5\n"
         "0,1,2,3,6,9,8\n"
         "1,2,4,4,7,9,8\n"
         "2,3,5,4,6.5,12,10\n"
         "3,2,6,2,6,11,10\n"
         "4,1,2,1,7,11,9\n";
}

inline fdepth::FunctionalSample multivariate(const std::vector<std::vector<std::vector<double>>>& values) {
  std::vector<fdepth::MultivariateCurve> curves;
  for (std::size_t i = 0; i < values.size(); ++i) curves.push_back({"c" + std::to_string(i), values[i]});
  return fdepth::FunctionalSample(fdepth::TimeGrid::indices(values.empty() ? 0 : values[0].size()),
                                  std::move(curves));
}

inline std::vector<std::vector<double>> random_curves(std::mt19937_64& rng, int n, int T) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::vector<double>> v(n, std::vector<double>(T));
  for (auto& c : v)
    for (auto& x : c) x = u(rng);
  return v;
}

// Small integers so that ties and touching bands are common.
inline std::vector<std::vector<double>> random_integer_curves(std::mt19937_64& rng, int n, int T, int range = 5) {
  std::uniform_int_distribution<int> u(0, range);
  std::vector<std::vector<double>> v(n, std::vector<double>(T));
  for (auto& c : v)
    for (auto& x : c) x = u(rng);
  return v;
}

inline std::vector<std::vector<double>> random_points(std::mt19937_64& rng, int m, int d) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<std::vector<double>> v(m, std::vector<double>(d));
  for (auto& p : v)
    for (auto& x : p) x = g(rng);
  return v;
}

inline std::vector<std::vector<std::vector<double>>> random_mcurves(std::mt19937_64& rng, int n, int T, int d) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<std::vector<std::vector<double>>> v(n, std::vector<std::vector<double>>(T, std::vector<double>(d)));
  for (auto& c : v)
    for (auto& row : c)
      for (auto& x : row) x = g(rng);
  return v;
}

inline std::vector<double> values(const fdepth::DepthResult& r) {
  std::vector<double> v;
  for (const auto& e : r.entries) v.push_back(e.depth);
  return v;
}

}  // namespace fixtures
