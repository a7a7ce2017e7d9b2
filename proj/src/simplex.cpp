#include "fdepth/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fdepth/error.hpp"

namespace fdepth {
namespace {

constexpr double kPivotRatio = 1e-12;

void check_simplex(const Simplex& s) {
  const std::size_t d = s.dim();
  if (d == 0 || s.vertices.size() != d + 1)
    throw Error("a simplex in dimension " + std::to_string(d) + " needs " + std::to_string(d + 1) +
                " vertices, got " + std::to_string(s.vertices.size()));
  for (const auto& v : s.vertices)
    if (v.size() != d) throw Error("simplex vertices have mixed dimensions");
}

SimplexSolver solver_for(const Simplex& s) {
  check_simplex(s);
  SimplexSolver solver(s.dim());
  for (std::size_t c = 0; c < s.vertices.size(); ++c) solver.set_vertex(c, s.vertices[c]);
  solver.factor();
  return solver;
}

}  // namespace

SimplexSolver::SimplexSolver(std::size_t dim)
    : dim_(dim), vertices_((dim + 1) * dim), lu_((dim + 1) * (dim + 1)), perm_(dim + 1), rhs_(dim + 1) {}

void SimplexSolver::set_vertex(std::size_t c, std::span<const double> v) {
  std::copy(v.begin(), v.end(), vertices_.begin() + static_cast<std::ptrdiff_t>(c * dim_));
}

void SimplexSolver::factor() {
  const std::size_t n = dim_ + 1;
  // Column c holds vertex c with a trailing 1.
  double max_norm = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    double sq = 1.0;
    for (std::size_t r = 0; r < dim_; ++r) {
      const double v = vertices_[c * dim_ + r];
      lu_[r * n + c] = v;
      sq += v * v;
    }
    lu_[dim_ * n + c] = 1.0;
    max_norm = std::max(max_norm, std::sqrt(sq));
  }
  const double threshold = kPivotRatio * max_norm;

  degenerate_ = false;
  for (std::size_t r = 0; r < n; ++r) perm_[r] = r;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(lu_[r * n + k]) > std::abs(lu_[piv * n + k])) piv = r;
    if (!(std::abs(lu_[piv * n + k]) >= threshold)) {
      degenerate_ = true;
      return;
    }
    if (piv != k) {
      std::swap_ranges(lu_.begin() + static_cast<std::ptrdiff_t>(k * n),
                       lu_.begin() + static_cast<std::ptrdiff_t>(k * n + n),
                       lu_.begin() + static_cast<std::ptrdiff_t>(piv * n));
      std::swap(perm_[k], perm_[piv]);
    }
    const double pivot = lu_[k * n + k];
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = lu_[r * n + k] / pivot;
      lu_[r * n + k] = f;
      for (std::size_t c = k + 1; c < n; ++c) lu_[r * n + c] -= f * lu_[k * n + c];
    }
  }
}

bool SimplexSolver::barycentric(std::span<const double> p, std::span<double> out) const {
  if (degenerate_) return false;
  const std::size_t n = dim_ + 1;
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t src = perm_[r];
    rhs_[r] = src < dim_ ? p[src] : 1.0;
  }
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) rhs_[r] -= lu_[r * n + c] * rhs_[c];
  for (std::size_t r = n; r-- > 0;) {
    for (std::size_t c = r + 1; c < n; ++c) rhs_[r] -= lu_[r * n + c] * rhs_[c];
    rhs_[r] /= lu_[r * n + r];
  }
  std::copy(rhs_.begin(), rhs_.end(), out.begin());
  return true;
}

bool SimplexSolver::contains(std::span<const double> p, double tol) const {
  if (degenerate_) {
    for (std::size_t c = 0; c <= dim_; ++c) {
      bool near = true;
      for (std::size_t r = 0; r < dim_ && near; ++r) near = std::abs(p[r] - vertices_[c * dim_ + r]) <= tol;
      if (near) return true;
    }
    return false;
  }
  const std::size_t n = dim_ + 1;
  double* w = rhs_.data();
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t src = perm_[r];
    w[r] = src < dim_ ? p[src] : 1.0;
  }
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) w[r] -= lu_[r * n + c] * w[c];
  for (std::size_t r = n; r-- > 0;) {
    for (std::size_t c = r + 1; c < n; ++c) w[r] -= lu_[r * n + c] * w[c];
    w[r] /= lu_[r * n + r];
    if (!(w[r] >= -tol)) return false;
  }
  return true;
}

bool point_in_simplex(std::span<const double> p, const Simplex& s, double tol) {
  const SimplexSolver solver = solver_for(s);
  if (p.size() != s.dim()) throw Error("point dimension does not match the simplex");
  return solver.contains(p, tol);
}

std::optional<std::vector<double>> barycentric_coordinates(std::span<const double> p, const Simplex& s) {
  const SimplexSolver solver = solver_for(s);
  if (p.size() != s.dim()) throw Error("point dimension does not match the simplex");
  std::vector<double> w(s.dim() + 1);
  if (!solver.barycentric(p, w)) return std::nullopt;
  return w;
}

double determinant_in_place(std::span<double> a, std::size_t n) {
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(a[r * n + k]) > std::abs(a[piv * n + k])) piv = r;
    if (a[piv * n + k] == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
      det = -det;
    }
    const double pivot = a[k * n + k];
    det *= pivot;
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a[r * n + k] / pivot;
      for (std::size_t c = k + 1; c < n; ++c) a[r * n + c] -= f * a[k * n + c];
    }
  }
  return det;
}

double simplex_volume(std::span<const std::span<const double>> vertices) {
  const std::size_t d = vertices.size() - 1;
  std::vector<double> m(d * d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) m[r * d + c] = vertices[c + 1][r] - vertices[0][r];
  double fact = 1.0;
  for (std::size_t k = 2; k <= d; ++k) fact *= static_cast<double>(k);
  return std::abs(determinant_in_place(m, d)) / fact;
}

double simplex_volume(const Simplex& s) {
  check_simplex(s);
  std::vector<std::span<const double>> views(s.vertices.begin(), s.vertices.end());
  return simplex_volume(views);
}

}  // namespace fdepth
