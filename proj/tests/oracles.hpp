#pragma once

// Brute-force reference implementations. They share no code with the
// library: subsets come from bitmasks, determinants from the Leibniz
// formula, containment from Cramer's rule.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Curve = std::vector<double>;                     // [t]
using Point = std::vector<double>;                     // [k]
using MCurve = std::vector<std::vector<double>>;       // [t][k]

inline double choose(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

// Every subset mask of {0..n-1} with exactly k bits.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == k) f(mask);
}

inline std::vector<int> members(std::uint32_t mask) {
  std::vector<int> v;
  for (int i = 0; i < 32; ++i)
    if (mask >> i & 1u) v.push_back(i);
  return v;
}

// Band depth (relax = false) or modified band depth (relax = true); bands
// built with curve i never count for curve i, denominator C(n, j).
inline std::vector<double> band_depth(const std::vector<Curve>& x, int J, bool relax) {
  const int n = static_cast<int>(x.size());
  const int T = static_cast<int>(x[0].size());
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 2; j <= J; ++j) {
      double hits = 0.0;
      for_each_subset(n, j, [&](std::uint32_t mask) {
        if (mask >> i & 1u) return;
        const auto m = members(mask);
        int inside = 0;
        for (int t = 0; t < T; ++t) {
          double lo = x[m[0]][t], hi = x[m[0]][t];
          for (int c : m) {
            lo = std::min(lo, x[c][t]);
            hi = std::max(hi, x[c][t]);
          }
          if (lo <= x[i][t] && x[i][t] <= hi) ++inside;
        }
        if (relax) hits += static_cast<double>(inside) / T;
        else if (inside == T) hits += 1.0;
      });
      out[i] += hits / choose(n, j);
    }
  }
  return out;
}

// Leibniz determinant of a small square matrix.
inline double det(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double total = 0.0;
  do {
    int inversions = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (perm[p] > perm[q]) ++inversions;
    double term = inversions % 2 ? -1.0 : 1.0;
    for (int r = 0; r < n; ++r) term *= a[r][perm[r]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Rows [v_c, 1] for c = 0..d.
inline std::vector<std::vector<double>> lifted(const std::vector<Point>& v) {
  std::vector<std::vector<double>> m;
  for (const auto& p : v) {
    auto row = p;
    row.push_back(1.0);
    m.push_back(row);
  }
  return m;
}

// Closed containment by Cramer's rule. Degenerate simplices only contain
// points within tol of a vertex.
inline bool in_simplex(const Point& p, const std::vector<Point>& v, double tol = 1e-9) {
  const auto base = lifted(v);
  const double d0 = det(base);
  double scale = 0.0;
  for (const auto& q : v)
    for (double c : q) scale = std::max(scale, std::abs(c));
  scale = std::max(scale, 1.0);
  if (std::abs(d0) <= 1e-10 * std::pow(scale, static_cast<double>(p.size()))) {
    for (const auto& q : v) {
      bool close = true;
      for (std::size_t k = 0; k < p.size(); ++k) close = close && std::abs(p[k] - q[k]) <= tol;
      if (close) return true;
    }
    return false;
  }
  for (std::size_t c = 0; c < v.size(); ++c) {
    auto m = base;
    for (std::size_t k = 0; k < p.size(); ++k) m[c][k] = p[k];
    if (det(m) / d0 < -tol) return false;
  }
  return true;
}

inline std::vector<double> simplicial_depth(const std::vector<Point>& x) {
  const int m = static_cast<int>(x.size());
  const int k = static_cast<int>(x[0].size()) + 1;
  std::vector<double> out(m, 0.0);
  for (int i = 0; i < m; ++i) {
    double hits = 0.0;
    for_each_subset(m, k, [&](std::uint32_t mask) {
      if (mask >> i & 1u) return;
      std::vector<Point> v;
      for (int c : members(mask)) v.push_back(x[c]);
      if (in_simplex(x[i], v)) hits += 1.0;
    });
    out[i] = hits / choose(m, k);
  }
  return out;
}

// Simplicial band depth (relax = false) or its modified form.
inline std::vector<double> simplicial_band_depth(const std::vector<MCurve>& x, bool relax) {
  const int n = static_cast<int>(x.size());
  const int T = static_cast<int>(x[0].size());
  const int k = static_cast<int>(x[0][0].size()) + 1;
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double hits = 0.0;
    for_each_subset(n, k, [&](std::uint32_t mask) {
      if (mask >> i & 1u) return;
      int inside = 0;
      for (int t = 0; t < T; ++t) {
        std::vector<Point> v;
        for (int c : members(mask)) v.push_back(x[c][t]);
        if (in_simplex(x[i][t], v)) ++inside;
      }
      if (relax) hits += static_cast<double>(inside) / T;
      else if (inside == T) hits += 1.0;
    });
    out[i] = hits / choose(n, k);
  }
  return out;
}

// Average ranks, then Pearson correlation of the ranks.
inline std::vector<double> ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(n);
  for (std::size_t s = 0; s < n;) {
    std::size_t e = s;
    while (e + 1 < n && v[idx[e + 1]] == v[idx[s]]) ++e;
    for (std::size_t q = s; q <= e; ++q) r[idx[q]] = (static_cast<double>(s + e) / 2.0) + 1.0;
    s = e + 1;
  }
  return r;
}

inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  const auto ra = ranks(a), rb = ranks(b);
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    sab += (ra[i] - ma) * (rb[i] - mb);
    saa += (ra[i] - ma) * (ra[i] - ma);
    sbb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (saa == 0 || sbb == 0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace oracle
