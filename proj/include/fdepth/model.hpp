#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fdepth {

// Shared time coordinates of a functional sample. Labels are optional
// display names (e.g. "00:30") carried over from the input index column.
struct TimeGrid {
  std::vector<double> points;
  std::vector<std::string> labels;

  std::size_t size() const { return points.size(); }

  // Grid 0, 1, ..., n-1.
  static TimeGrid indices(std::size_t n);
};

struct Curve {
  std::string id;
  std::vector<double> values;
};

// One d-vector per grid point.
struct MultivariateCurve {
  std::string id;
  std::vector<std::vector<double>> values;

  std::size_t dim() const { return values.empty() ? 0 : values.front().size(); }
};

class FunctionalSample {
 public:
  FunctionalSample() = default;
  FunctionalSample(TimeGrid grid, std::vector<Curve> curves);
  FunctionalSample(TimeGrid grid, std::vector<MultivariateCurve> curves);

  const TimeGrid& grid() const { return grid_; }
  bool is_multivariate() const;
  std::size_t size() const;
  // 1 for univariate samples.
  std::size_t dim() const;
  const std::string& id(std::size_t i) const;

  const std::vector<Curve>& univariate() const;
  const std::vector<MultivariateCurve>& multivariate() const;

  // Value of curve i at grid point t, coordinate k.
  double value(std::size_t i, std::size_t t, std::size_t k = 0) const;

  FunctionalSample subset(std::span<const std::size_t> indices) const;
  // Concatenation; both samples must have the same kind. Ids are not checked.
  FunctionalSample concat(const FunctionalSample& other) const;

 private:
  TimeGrid grid_;
  std::variant<std::vector<Curve>, std::vector<MultivariateCurve>> curves_;
};

class PointCloud {
 public:
  PointCloud() = default;
  // Ids default to the 0-based row index.
  explicit PointCloud(std::vector<std::vector<double>> points,
                      std::vector<std::string> ids = {});

  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return points_.empty() ? 0 : points_.front().size(); }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::span<const double> point(std::size_t i) const { return points_[i]; }
  const std::vector<std::vector<double>>& points() const { return points_; }

  PointCloud subset(std::span<const std::size_t> indices) const;
  PointCloud concat(const PointCloud& other) const;

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<double>> points_;
};

enum class Containment { r2, simplex, oja, mahalanobis, l1 };

std::string_view to_string(Containment c);
// Throws Error listing the valid names.
Containment parse_containment(std::string_view name);

using ProgressFn = std::function<void(double fraction)>;

struct DepthParams {
  int J = 2;
  // Number of resampling blocks; absent means exact computation.
  std::optional<int> K;
  Containment containment = Containment::r2;
  bool relax = false;
  std::optional<std::uint64_t> seed;
  // Containment slack. Absent: 0 for bands, 1e-9 for barycentric coordinates.
  std::optional<double> tol;
  bool quiet = false;
  bool deep_check = false;

  // Execution controls. Not part of the result and never serialized.
  unsigned threads = 0;  // 0: hardware concurrency
  ProgressFn progress;

  double band_tol() const { return tol.value_or(0.0); }
  double simplex_tol() const { return tol.value_or(1e-9); }
  std::uint64_t seed_or_default() const { return seed.value_or(0); }
};

// Throws Error on J < 2, K < 1 or negative tol.
void check_params(const DepthParams& params);

struct DepthEntry {
  std::string id;
  double depth = 0.0;
};

struct DepthResult {
  std::string method;
  DepthParams params;
  std::vector<DepthEntry> entries;  // input order unless stated otherwise
  // Set when no nondegenerate simplex exists in the sample.
  bool degenerate = false;
};

enum class ViolationKind { shape, value, uniqueness, grid };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string item;    // offending id (empty for grid problems)
  std::size_t index;   // grid/row/coordinate position, when meaningful
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Shallow mode checks shapes and id uniqueness; deep mode also scans for
// non-finite values and a non-increasing grid.
ValidationReport validate_functional(const FunctionalSample& sample, bool deep);
ValidationReport validate_pointcloud(const PointCloud& cloud, bool deep);

// Throws Error carrying report.summary() when the report is not clean.
void require_valid(const ValidationReport& report);

}  // namespace fdepth
