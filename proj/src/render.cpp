#include "fdepth/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "fdepth/error.hpp"

namespace fdepth {
namespace {

constexpr double W = 800, H = 500;
constexpr const char* kRed = "#d62728";
constexpr const char* kGray = "#b0b0b0";

std::string num(double v, int decimals = 2) {
  if (!std::isfinite(v)) v = 0.0;
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
  std::string s(buf, r.ptr);
  if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string gray(double t) {
  // t = 0 -> light, t = 1 -> dark
  const int level = static_cast<int>(std::lround(235.0 - 215.0 * std::clamp(t, 0.0, 1.0)));
  static const char* hex = "0123456789abcdef";
  std::string s = "#";
  for (int k = 0; k < 3; ++k) {
    s += hex[level / 16];
    s += hex[level % 16];
  }
  return s;
}

struct Range {
  double lo = 0, hi = 1;
  void fit(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  // Widen empty or degenerate ranges so the mapping stays defined.
  void settle() {
    if (!(hi > lo)) {
      lo -= 1;
      hi += 1;
    }
  }
};

Range range_of(const std::vector<double>& v) {
  Range r{v.empty() ? 0 : v.front(), v.empty() ? 0 : v.front()};
  for (double x : v)
    if (std::isfinite(x)) r.fit(x);
  r.settle();
  return r;
}

struct Frame {
  double left = 70, right = 170, top = 50, bottom = 60;
  Range x, y;
  double px(double v) const { return left + (v - x.lo) / (x.hi - x.lo) * (W - left - right); }
  double py(double v) const { return H - bottom - (v - y.lo) / (y.hi - y.lo) * (H - top - bottom); }
};

std::string header(const std::string& title) {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"#ffffff\"/>\n";
  if (!title.empty())
    s += "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" + esc(title) +
         "</text>\n";
  return s;
}

std::string axes(const Frame& f) {
  std::string s;
  const double x0 = f.left, x1 = W - f.right, y0 = H - f.bottom, y1 = f.top;
  s += "<g stroke=\"#000000\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y0) + "\"/>\n";
  s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(y1) + "\"/>\n";
  s += "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#000000\">\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = f.x.lo + (f.x.hi - f.x.lo) * k / 4.0;
    const double yv = f.y.lo + (f.y.hi - f.y.lo) * k / 4.0;
    s += "<text x=\"" + num(f.px(xv)) + "\" y=\"" + num(y0 + 18) + "\" text-anchor=\"middle\">" + num(xv) + "</text>\n";
    s += "<text x=\"" + num(x0 - 6) + "\" y=\"" + num(f.py(yv) + 4) + "\" text-anchor=\"end\">" + num(yv) + "</text>\n";
  }
  s += "</g>\n";
  return s;
}

std::string legend(const std::vector<std::string>& ids) {
  std::string s = "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  double y = 60;
  for (const auto& id : ids) {
    s += "<line x1=\"645\" y1=\"" + num(y) + "\" x2=\"665\" y2=\"" + num(y) + "\" stroke=\"" + kRed +
         "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"672\" y=\"" + num(y + 4) + "\">" + esc(id) + "</text>\n";
    y += 18;
  }
  s += "</g>\n";
  return s;
}

}  // namespace

std::string render_curves(const FunctionalSample& sample, const std::vector<std::string>& highlight_ids,
                          const std::string& title) {
  if (sample.is_multivariate()) throw Error("line plots need a univariate sample");
  const auto& curves = sample.univariate();
  const std::set<std::string> marked(highlight_ids.begin(), highlight_ids.end());
  const auto& grid = sample.grid();

  Frame f;
  f.x = range_of(grid.points);
  std::vector<double> all;
  for (const auto& c : curves) all.insert(all.end(), c.values.begin(), c.values.end());
  f.y = range_of(all);

  std::string s = header(title) + axes(f);
  std::vector<std::string> shown;
  // Gray first so red curves stay on top.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& c : curves) {
      const bool red = marked.contains(c.id);
      if (red != (pass == 1)) continue;
      if (red) shown.push_back(c.id);
      s += "<polyline fill=\"none\" stroke=\"";
      s += red ? kRed : kGray;
      s += red ? "\" stroke-width=\"2.5\" points=\"" : "\" stroke-width=\"1\" points=\"";
      for (std::size_t t = 0; t < c.values.size() && t < grid.size(); ++t) {
        if (t) s += ' ';
        s += num(f.px(grid.points[t])) + "," + num(f.py(c.values[t]));
      }
      s += "\"><title>" + esc(c.id) + "</title></polyline>\n";
    }
  }
  s += legend(shown);
  return s + "</svg>\n";
}

std::string render_scatter(const PointCloud& cloud, const DepthResult& depths, const ScatterStyle& style,
                           const std::string& title) {
  const std::size_t d = cloud.dim();
  if (d != 2 && d != 3) throw Error("scatter plots need 2-D or 3-D points, got d = " + std::to_string(d));
  std::map<std::string, double> depth_of;
  for (const auto& e : depths.entries) depth_of[e.id] = e.depth;

  const std::size_t m = cloud.size();
  std::vector<double> xs(m), ys(m), ds(m);
  // Fixed view for 3-D: azimuth 30 degrees, elevation 20 degrees.
  const double az = 30.0 * M_PI / 180.0, el = 20.0 * M_PI / 180.0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto p = cloud.point(i);
    if (d == 2) {
      xs[i] = p[0];
      ys[i] = p[1];
    } else {
      xs[i] = p[0] * std::cos(az) - p[1] * std::sin(az);
      ys[i] = p[2] * std::cos(el) - (p[0] * std::sin(az) + p[1] * std::cos(az)) * std::sin(el);
    }
    const auto it = depth_of.find(cloud.id(i));
    if (it == depth_of.end()) throw Error("no depth for point '" + cloud.id(i) + "'");
    ds[i] = it->second;
  }

  Frame f;
  f.right = 40;
  f.x = range_of(xs);
  f.y = range_of(ys);
  const auto [dmin, dmax] = m ? std::minmax_element(ds.begin(), ds.end()) : std::pair{ds.end(), ds.end()};
  const double lo = m ? *dmin : 0, hi = m ? *dmax : 0;

  const std::set<std::string> marked(style.highlight_ids.begin(), style.highlight_ids.end());
  const bool gradient = style.mode == ScatterStyle::Mode::gradient;
  std::string s = header(title) + axes(f);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < m; ++i) {
      const bool red = !gradient && marked.contains(cloud.id(i));
      if (red != (pass == 1)) continue;
      std::string fill;
      if (gradient) fill = gray(hi > lo ? (ds[i] - lo) / (hi - lo) : 1.0);
      else fill = red ? kRed : kGray;
      s += "<circle cx=\"" + num(f.px(xs[i])) + "\" cy=\"" + num(f.py(ys[i])) + "\" r=\"" + (red ? "5" : "4") +
           "\" fill=\"" + fill + "\"><title>" + esc(cloud.id(i)) + " " + num(ds[i], 6) + "</title></circle>\n";
    }
  }
  return s + "</svg>\n";
}

std::string render_heatmap(const std::vector<std::vector<double>>& matrix, const std::vector<std::string>& labels,
                           const std::string& title) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error("heatmap needs a non-empty matrix");
  for (const auto& row : matrix)
    if (row.size() != n) throw Error("heatmap needs a square matrix");
  if (labels.size() != n) throw Error("heatmap needs one label per row");

  double lo = matrix[0][0], hi = matrix[0][0];
  for (const auto& row : matrix)
    for (double v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }

  const double left = 150, top = 50, bottom = 80;
  const double cell = std::min((W - left - 40) / static_cast<double>(n), (H - top - bottom) / static_cast<double>(n));
  std::string s = header(title);
  s += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double t = hi > lo ? (matrix[i][j] - lo) / (hi - lo) : 0.0;
      const double x = left + cell * static_cast<double>(j), y = top + cell * static_cast<double>(i);
      s += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(cell) + "\" height=\"" + num(cell) +
           "\" fill=\"" + gray(t) + "\" stroke=\"#ffffff\"/>\n";
      s += "<text x=\"" + num(x + cell / 2) + "\" y=\"" + num(y + cell / 2 + 4) + "\" text-anchor=\"middle\" fill=\"" +
           (t > 0.55 ? "#ffffff" : "#000000") + "\">" + num(matrix[i][j]) + "</text>\n";
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double c = cell * (static_cast<double>(i) + 0.5);
    s += "<text x=\"" + num(left - 6) + "\" y=\"" + num(top + c + 4) + "\" text-anchor=\"end\">" + esc(labels[i]) +
         "</text>\n";
    s += "<text x=\"" + num(left + c) + "\" y=\"" + num(top + cell * static_cast<double>(n) + 16) +
         "\" text-anchor=\"middle\">" + esc(labels[i]) + "</text>\n";
  }
  s += "</g>\n";
  return s + "</svg>\n";
}

}  // namespace fdepth
