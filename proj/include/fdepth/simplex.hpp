#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace fdepth {

// d + 1 vertices in d dimensions.
struct Simplex {
  std::vector<std::vector<double>> vertices;

  std::size_t dim() const { return vertices.empty() ? 0 : vertices.front().size(); }
};

// Factored barycentric system of one simplex, reusable across many query
// points. The (d+1)x(d+1) system [v_0 ... v_d; 1 ... 1] * w = [p; 1] is
// solved by LU with partial pivoting; the simplex counts as degenerate when
// a pivot falls below 1e-12 times the largest column norm.
class SimplexSolver {
 public:
  explicit SimplexSolver(std::size_t dim = 0);

  std::size_t dim() const { return dim_; }

  // Vertex c must have dim() coordinates.
  void set_vertex(std::size_t c, std::span<const double> v);
  void factor();

  bool degenerate() const { return degenerate_; }

  // Writes dim()+1 barycentric coordinates; false if degenerate.
  bool barycentric(std::span<const double> p, std::span<double> out) const;

  // Closed containment: all coordinates >= -tol. A degenerate simplex
  // contains only points within tol (max-norm) of one of its vertices.
  bool contains(std::span<const double> p, double tol) const;

 private:
  std::size_t dim_;
  std::vector<double> vertices_;  // (d+1) x d, row per vertex
  std::vector<double> lu_;        // (d+1) x (d+1), row-major
  std::vector<std::size_t> perm_;
  bool degenerate_ = true;
  mutable std::vector<double> rhs_;
};

// Throws Error if the simplex is malformed or p has the wrong dimension.
bool point_in_simplex(std::span<const double> p, const Simplex& s, double tol = 1e-9);

// Barycentric coordinates, or nullopt for a degenerate simplex.
std::optional<std::vector<double>> barycentric_coordinates(std::span<const double> p, const Simplex& s);

// |det[v_1 - v_0, ..., v_d - v_0]| / d!
double simplex_volume(const Simplex& s);

// Same as simplex_volume for vertices given as spans (no validation).
double simplex_volume(std::span<const std::span<const double>> vertices);

// Determinant of an n x n row-major matrix by partial-pivot LU; the input
// is overwritten.
double determinant_in_place(std::span<double> a, std::size_t n);

}  // namespace fdepth
