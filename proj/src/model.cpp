#include "fdepth/model.hpp"

#include <cmath>
#include <sstream>
#include <unordered_set>

#include "fdepth/error.hpp"

namespace fdepth {

TimeGrid TimeGrid::indices(std::size_t n) {
  TimeGrid grid;
  grid.points.resize(n);
  for (std::size_t i = 0; i < n; ++i) grid.points[i] = static_cast<double>(i);
  return grid;
}

FunctionalSample::FunctionalSample(TimeGrid grid, std::vector<Curve> curves)
    : grid_(std::move(grid)), curves_(std::move(curves)) {}

FunctionalSample::FunctionalSample(TimeGrid grid, std::vector<MultivariateCurve> curves)
    : grid_(std::move(grid)), curves_(std::move(curves)) {}

bool FunctionalSample::is_multivariate() const {
  return std::holds_alternative<std::vector<MultivariateCurve>>(curves_);
}

std::size_t FunctionalSample::size() const {
  return std::visit([](const auto& v) { return v.size(); }, curves_);
}

std::size_t FunctionalSample::dim() const {
  if (!is_multivariate()) return 1;
  const auto& mv = multivariate();
  return mv.empty() ? 0 : mv.front().dim();
}

const std::string& FunctionalSample::id(std::size_t i) const {
  return std::visit([i](const auto& v) -> const std::string& { return v[i].id; }, curves_);
}

const std::vector<Curve>& FunctionalSample::univariate() const {
  if (is_multivariate()) throw Error("expected a univariate functional sample");
  return std::get<std::vector<Curve>>(curves_);
}

const std::vector<MultivariateCurve>& FunctionalSample::multivariate() const {
  if (!is_multivariate()) throw Error("expected a multivariate functional sample");
  return std::get<std::vector<MultivariateCurve>>(curves_);
}

double FunctionalSample::value(std::size_t i, std::size_t t, std::size_t k) const {
  if (is_multivariate()) return multivariate()[i].values[t][k];
  return univariate()[i].values[t];
}

FunctionalSample FunctionalSample::subset(std::span<const std::size_t> indices) const {
  return std::visit(
      [&](const auto& v) {
        std::remove_cvref_t<decltype(v)> out;
        out.reserve(indices.size());
        for (std::size_t i : indices) {
          if (i >= v.size()) throw Error("curve index out of range");
          out.push_back(v[i]);
        }
        return FunctionalSample(grid_, std::move(out));
      },
      curves_);
}

FunctionalSample FunctionalSample::concat(const FunctionalSample& other) const {
  if (is_multivariate() != other.is_multivariate())
    throw Error("cannot combine univariate and multivariate samples");
  return std::visit(
      [&](const auto& v) {
        using Vec = std::remove_cvref_t<decltype(v)>;
        Vec out = v;
        const auto& rhs = std::get<Vec>(other.curves_);
        out.insert(out.end(), rhs.begin(), rhs.end());
        return FunctionalSample(grid_, std::move(out));
      },
      curves_);
}

PointCloud::PointCloud(std::vector<std::vector<double>> points, std::vector<std::string> ids)
    : ids_(std::move(ids)), points_(std::move(points)) {
  if (ids_.empty()) {
    ids_.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) ids_.push_back(std::to_string(i));
  }
  if (ids_.size() != points_.size()) throw Error("point cloud id count does not match row count");
}

PointCloud PointCloud::subset(std::span<const std::size_t> indices) const {
  std::vector<std::vector<double>> pts;
  std::vector<std::string> ids;
  for (std::size_t i : indices) {
    if (i >= size()) throw Error("point index out of range");
    pts.push_back(points_[i]);
    ids.push_back(ids_[i]);
  }
  return PointCloud(std::move(pts), std::move(ids));
}

PointCloud PointCloud::concat(const PointCloud& other) const {
  auto pts = points_;
  auto ids = ids_;
  pts.insert(pts.end(), other.points_.begin(), other.points_.end());
  ids.insert(ids.end(), other.ids_.begin(), other.ids_.end());
  return PointCloud(std::move(pts), std::move(ids));
}

std::string_view to_string(Containment c) {
  switch (c) {
    case Containment::r2: return "r2";
    case Containment::simplex: return "simplex";
    case Containment::oja: return "oja";
    case Containment::mahalanobis: return "mahalanobis";
    case Containment::l1: return "l1";
  }
  return "?";
}

Containment parse_containment(std::string_view name) {
  for (auto c : {Containment::r2, Containment::simplex, Containment::oja,
                 Containment::mahalanobis, Containment::l1}) {
    if (to_string(c) == name) return c;
  }
  throw Error("unknown containment '" + std::string(name) +
              "' (valid: r2, simplex, oja, mahalanobis, l1)");
}

void check_params(const DepthParams& params) {
  if (params.J < 2) throw Error("J must be >= 2, got " + std::to_string(params.J));
  if (params.K && *params.K < 1) throw Error("K must be >= 1, got " + std::to_string(*params.K));
  if (params.tol && !(*params.tol >= 0.0)) throw Error("tol must be nonnegative");
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::shape: return "shape";
    case ViolationKind::value: return "value";
    case ViolationKind::uniqueness: return "uniqueness";
    case ViolationKind::grid: return "grid";
  }
  return "?";
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << violations.size() << " validation violation(s)";
  for (const auto& v : violations) os << "; [" << to_string(v.kind) << "] " << v.message;
  return os.str();
}

void require_valid(const ValidationReport& report) {
  if (!report.ok()) throw Error(report.summary());
}

namespace {

void check_unique(const std::vector<std::string>& ids, ValidationReport& report) {
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!seen.insert(ids[i]).second)
      report.violations.push_back({ViolationKind::uniqueness, ids[i], i, "duplicate id '" + ids[i] + "'"});
  }
}

void check_value(double v, const std::string& id, std::size_t t, ValidationReport& report) {
  if (!std::isfinite(v)) {
    report.violations.push_back({ViolationKind::value, id, t,
                                 "non-finite value in '" + id + "' at index " + std::to_string(t)});
  }
}

}  // namespace

ValidationReport validate_functional(const FunctionalSample& sample, bool deep) {
  ValidationReport report;
  const std::size_t len = sample.grid().size();
  if (len == 0) report.violations.push_back({ViolationKind::grid, "", 0, "empty time grid"});
  const auto& labels = sample.grid().labels;
  if (!labels.empty() && labels.size() != len)
    report.violations.push_back({ViolationKind::grid, "", labels.size(), "grid label count differs from grid length"});

  std::vector<std::string> ids;
  ids.reserve(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) ids.push_back(sample.id(i));
  check_unique(ids, report);

  if (!sample.is_multivariate()) {
    for (const auto& c : sample.univariate()) {
      if (c.values.size() != len) {
        report.violations.push_back({ViolationKind::shape, c.id, c.values.size(),
                                     "curve '" + c.id + "' has " + std::to_string(c.values.size()) +
                                         " values, grid has " + std::to_string(len)});
        continue;
      }
      if (deep)
        for (std::size_t t = 0; t < len; ++t) check_value(c.values[t], c.id, t, report);
    }
  } else {
    const std::size_t d = sample.dim();
    if (d == 0) report.violations.push_back({ViolationKind::shape, "", 0, "multivariate curves have dimension 0"});
    for (const auto& c : sample.multivariate()) {
      if (c.values.size() != len) {
        report.violations.push_back({ViolationKind::shape, c.id, c.values.size(),
                                     "curve '" + c.id + "' has " + std::to_string(c.values.size()) +
                                         " rows, grid has " + std::to_string(len)});
        continue;
      }
      for (std::size_t t = 0; t < len; ++t) {
        if (c.values[t].size() != d) {
          report.violations.push_back({ViolationKind::shape, c.id, t,
                                       "curve '" + c.id + "' row " + std::to_string(t) + " has " +
                                           std::to_string(c.values[t].size()) + " entries, expected " +
                                           std::to_string(d)});
          continue;
        }
        if (deep)
          for (double v : c.values[t]) check_value(v, c.id, t, report);
      }
    }
  }

  if (deep) {
    const auto& pts = sample.grid().points;
    for (std::size_t t = 0; t < pts.size(); ++t) {
      if (!std::isfinite(pts[t])) {
        report.violations.push_back({ViolationKind::grid, "", t, "non-finite grid point at index " + std::to_string(t)});
      } else if (t > 0 && !(pts[t] > pts[t - 1])) {
        report.violations.push_back({ViolationKind::grid, "", t, "grid not strictly increasing at index " + std::to_string(t)});
      }
    }
  }
  return report;
}

ValidationReport validate_pointcloud(const PointCloud& cloud, bool deep) {
  ValidationReport report;
  check_unique(cloud.ids(), report);
  const std::size_t d = cloud.dim();
  if (cloud.size() > 0 && d == 0)
    report.violations.push_back({ViolationKind::shape, cloud.id(0), 0, "points have dimension 0"});
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    if (p.size() != d) {
      report.violations.push_back({ViolationKind::shape, cloud.id(i), i,
                                   "row '" + cloud.id(i) + "' has " + std::to_string(p.size()) +
                                       " coordinates, expected " + std::to_string(d)});
      continue;
    }
    if (deep)
      for (std::size_t k = 0; k < p.size(); ++k) check_value(p[k], cloud.id(i), k, report);
  }
  return report;
}

}  // namespace fdepth
