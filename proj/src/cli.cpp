#include "fdepth/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdepth/depth.hpp"
#include "fdepth/error.hpp"
#include "fdepth/homogeneity.hpp"
#include "fdepth/io.hpp"
#include "fdepth/render.hpp"
#include "fdepth/statistics.hpp"

namespace fdepth {
namespace {

namespace fs = std::filesystem;

// Raised for bad flag values found after CLI11 has accepted the command line.
struct UsageError : Error {
  using Error::Error;
};

struct CommonOptions {
  int J = 2;
  std::optional<int> K;
  std::string containment;
  bool relax = false;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  bool quiet = false;
  bool deep_check = false;
  unsigned threads = 0;
  std::string out;
  std::string format = "json";

  void add_compute(CLI::App* app, bool with_j = true) {
    if (with_j) app->add_option("--J", J, "Band size (curves per band), >= 2")->capture_default_str();
    app->add_option("--K", K, "Resampling blocks; exact computation when omitted");
    app->add_flag("--relax", relax, "Modified (proportion of time) depth");
    app->add_option("--seed", seed, "Resampling seed (default 0)");
    app->add_option("--tol", tol, "Containment tolerance");
    app->add_flag("--deep-check", deep_check, "Full data validation");
    app->add_option("--threads", threads, "Worker threads (0: all cores)")->capture_default_str();
    add_quiet(app);
  }
  void add_quiet(CLI::App* app) { app->add_flag("--quiet", quiet, "No progress output"); }
  void add_output(CLI::App* app) {
    app->add_option("--out", out, "Output file (default: standard output)");
    app->add_option("--format", format, "json or csv")->capture_default_str();
  }

  DepthParams params(Containment fallback, std::ostream& err) const {
    DepthParams p;
    p.J = J;
    p.K = K;
    p.relax = relax;
    p.seed = seed;
    p.tol = tol;
    p.quiet = quiet;
    p.deep_check = deep_check;
    p.threads = threads;
    try {
      p.containment = containment.empty() ? fallback : parse_containment(containment);
      check_params(p);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (!quiet) {
      auto last = std::make_shared<int>(-1);
      p.progress = [&err, last](double f) {
        const int pct = static_cast<int>(f * 100.0);
        if (pct == *last) return;
        *last = pct;
        err << "progress " << pct << "%\n";
      };
    }
    return p;
  }

  Format fmt() const {
    try {
      return parse_format(format);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) out << text;
  else write_text(path, text);
}

void error_line(std::ostream& err, std::string_view kind, std::string_view message) {
  nlohmann::ordered_json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  err << j.dump() << "\n";
}

FunctionalSample load_functional(const std::string& path) {
  if (fs::is_directory(path)) return parse_multivariate_dir(list_csv_files(path));
  return parse_univariate_csv(path);
}

std::string group_name(const std::string& path) {
  fs::path p(path);
  if (!p.has_filename()) p = p.parent_path();
  return p.stem().string();
}

std::string stats_text(const std::string& query, const std::vector<DepthEntry>& entries, Format format) {
  if (format == Format::csv) {
    std::string s = "id,depth\n";
    for (const auto& e : entries) s += e.id + "," + fixed6(e.depth) + "\n";
    return s;
  }
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "stats";
  j["query"] = query;
  auto list = nlohmann::ordered_json::array();
  for (const auto& e : entries) list.push_back({{"id", e.id}, {"display", fixed6(e.depth)}, {"value", e.depth}});
  j["entries"] = list;
  return j.dump(2) + "\n";
}

std::size_t to_count(const std::string& s, const char* what) {
  std::size_t pos = 0;
  long long v = -1;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
  }
  if (pos != s.size() || v < 0) throw UsageError(std::string(what) + " must be a non-negative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Statistical depth for functional data and point clouds", "fdepth"};
  app.set_version_flag("--version", std::string("fdepth ") + kVersion + " (result schema " +
                                        std::to_string(kSchemaVersion) + ")");
  app.require_subcommand(1);

  // functional
  CommonOptions fo;
  std::string f_input, f_multi;
  auto* functional = app.add_subcommand("functional", "Band depth family for functional data");
  functional->add_option("--input", f_input, "Univariate CSV, one curve per column");
  functional->add_option("--multivariate", f_multi, "Directory of CSV files, one curve per file");
  functional->add_option("--containment", fo.containment, "r2 or simplex")->default_str("r2");
  fo.add_compute(functional);
  fo.add_output(functional);

  // pointcloud
  CommonOptions po;
  std::string p_input;
  auto* pointcloud = app.add_subcommand("pointcloud", "Depth of points in R^d");
  pointcloud->add_option("--input", p_input, "CSV, one point per row")->required();
  pointcloud->add_option("--containment", po.containment, "simplex, oja, mahalanobis or l1")->default_str("simplex");
  po.add_compute(pointcloud, false);
  po.add_output(pointcloud);

  // stats
  CommonOptions so;
  std::string s_depths, s_query, s_value;
  auto* stats = app.add_subcommand("stats", "L-statistics over a saved depth result");
  stats->add_option("--depths", s_depths, "Depth result JSON")->required();
  stats->add_option("query", s_query, "ordered, deepest, outlying or central")->required();
  stats->add_option("value", s_value, "N for deepest/outlying, FRAC for central");
  so.add_output(stats);
  so.format = "csv";

  // homogeneity
  CommonOptions ho;
  std::string h_f, h_g, h_method = "p2";
  bool h_cloud = false;
  auto* homog = app.add_subcommand("homogeneity", "Homogeneity coefficient between two samples");
  homog->add_option("--f", h_f, "Sample F (CSV, or directory for multivariate curves)")->required();
  homog->add_option("--g", h_g, "Sample G")->required();
  homog->add_option("--method", h_method, "p1 or p2")->capture_default_str();
  homog->add_flag("--pointcloud", h_cloud, "Inputs are point clouds");
  homog->add_option("--containment", ho.containment, "Containment (default r2, or simplex for point clouds)");
  ho.add_compute(homog);
  ho.add_output(homog);

  // matrix
  CommonOptions mo;
  std::vector<std::string> m_groups;
  std::string m_method = "p2", m_heatmap;
  bool m_cloud = false;
  auto* matrix = app.add_subcommand("matrix", "Pairwise homogeneity matrix across groups");
  matrix->add_option("--groups", m_groups, "Group files or directories")->required();
  matrix->add_option("--method", m_method, "p1 or p2")->capture_default_str();
  matrix->add_option("--heatmap", m_heatmap, "Also write an SVG heatmap");
  matrix->add_flag("--pointcloud", m_cloud, "Inputs are point clouds");
  matrix->add_option("--containment", mo.containment, "Containment (default r2, or simplex for point clouds)");
  mo.add_compute(matrix);
  mo.add_output(matrix);

  // plot
  CommonOptions lo;
  std::string l_kind, l_n, l_input, l_depths, l_title;
  bool l_cloud = false;
  auto* plot = app.add_subcommand("plot", "SVG figures");
  plot->add_option("kind", l_kind, "deepest, outlying or depths")->required();
  plot->add_option("n", l_n, "Number of curves or points to mark");
  plot->add_option("--input", l_input, "Sample CSV")->required();
  plot->add_option("--depths", l_depths, "Depth result JSON (computed when omitted)");
  plot->add_option("--title", l_title, "Figure title");
  plot->add_flag("--pointcloud", l_cloud, "Input is a point cloud (implied by 'depths')");
  plot->add_option("--containment", lo.containment, "Containment used when depths are computed");
  lo.add_compute(plot);
  plot->add_option("--out", lo.out, "SVG file (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    error_line(err, "usage", e.what());
    return 2;
  }

  try {
    if (*functional) {
      if (f_input.empty() == f_multi.empty()) throw UsageError("give exactly one of --input or --multivariate");
      const Format format = fo.fmt();
      const DepthParams params = fo.params(Containment::r2, err);
      const FunctionalSample sample =
          f_multi.empty() ? parse_univariate_csv(f_input) : parse_multivariate_dir(list_csv_files(f_multi));
      emit(format_result(compute_depth(sample, params), format), fo.out, out);
    } else if (*pointcloud) {
      const Format format = po.fmt();
      const DepthParams params = po.params(Containment::simplex, err);
      emit(format_result(compute_depth(parse_pointcloud_csv(p_input), params), format), po.out, out);
    } else if (*stats) {
      const Format format = so.fmt();
      const DepthResult result = read_result_json(s_depths);
      std::string text;
      if (s_query == "ordered") {
        if (!s_value.empty()) throw UsageError("'ordered' takes no value");
        text = stats_text(s_query, ordered(result), format);
      } else if (s_query == "deepest" || s_query == "outlying") {
        const std::size_t n = s_value.empty() ? 1 : to_count(s_value, "N");
        text = stats_text(s_query, s_query == "deepest" ? deepest(result, n) : outlying(result, n), format);
      } else if (s_query == "central") {
        double frac = 0.5;
        if (!s_value.empty()) {
          std::size_t pos = 0;
          try {
            frac = std::stod(s_value, &pos);
          } catch (const std::exception&) {
            pos = 0;
          }
          if (pos != s_value.size()) throw UsageError("FRAC must be a number, got '" + s_value + "'");
        }
        std::vector<DepthEntry> picked;
        const auto ids = central_region(result, frac);
        for (const auto& e : ordered(result))
          if (std::find(ids.begin(), ids.end(), e.id) != ids.end()) picked.push_back(e);
        text = stats_text(s_query, picked, format);
      } else {
        throw UsageError("unknown stats query '" + s_query + "' (valid: ordered, deepest, outlying, central)");
      }
      emit(text, so.out, out);
    } else if (*homog) {
      const Format format = ho.fmt();
      HomogeneityMethod method;
      try {
        method = parse_homogeneity_method(h_method);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      const DepthParams params = ho.params(h_cloud ? Containment::simplex : Containment::r2, err);
      const HomogeneityReport report =
          h_cloud ? homogeneity(method, parse_pointcloud_csv(h_f), parse_pointcloud_csv(h_g), params)
                  : homogeneity(method, load_functional(h_f), load_functional(h_g), params);
      emit(format_result(report, format), ho.out, out);
    } else if (*matrix) {
      const Format format = mo.fmt();
      HomogeneityMethod method;
      try {
        method = parse_homogeneity_method(m_method);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      const DepthParams params = mo.params(m_cloud ? Containment::simplex : Containment::r2, err);
      std::vector<std::string> labels;
      for (const auto& g : m_groups) labels.push_back(group_name(g));
      std::vector<std::vector<double>> m;
      if (m_cloud) {
        std::vector<PointCloud> groups;
        for (const auto& g : m_groups) groups.push_back(parse_pointcloud_csv(g));
        m = homogeneity_matrix(groups, method, params);
      } else {
        std::vector<FunctionalSample> groups;
        for (const auto& g : m_groups) groups.push_back(load_functional(g));
        m = homogeneity_matrix(groups, method, params);
      }
      DepthParams echo = params;
      if (echo.K) echo.seed = echo.seed_or_default();
      emit(format_matrix(m, labels, method, echo, format), mo.out, out);
      if (!m_heatmap.empty())
        write_text(m_heatmap, render_heatmap(m, labels, std::string(to_string(method)) + " homogeneity"));
    } else if (*plot) {
      const bool cloud = l_cloud || l_kind == "depths";
      if (l_kind != "deepest" && l_kind != "outlying" && l_kind != "depths")
        throw UsageError("unknown plot '" + l_kind + "' (valid: deepest, outlying, depths)");
      if (l_kind == "depths" && !l_n.empty()) throw UsageError("'depths' takes no count");
      const std::size_t n = l_n.empty() ? 1 : to_count(l_n, "N");
      const DepthParams params = lo.params(cloud ? Containment::simplex : Containment::r2, err);
      std::string svg;
      if (cloud) {
        const PointCloud pc = parse_pointcloud_csv(l_input);
        const DepthResult r = l_depths.empty() ? compute_depth(pc, params) : read_result_json(l_depths);
        ScatterStyle style;
        if (l_kind != "depths") {
          style.mode = ScatterStyle::Mode::highlight;
          for (const auto& e : l_kind == "deepest" ? deepest(r, n) : outlying(r, n)) style.highlight_ids.push_back(e.id);
        }
        svg = render_scatter(pc, r, style, l_title);
      } else {
        const FunctionalSample sample = parse_univariate_csv(l_input);
        const DepthResult r = l_depths.empty() ? compute_depth(sample, params) : read_result_json(l_depths);
        std::vector<std::string> ids;
        for (const auto& e : l_kind == "deepest" ? deepest(r, n) : outlying(r, n)) ids.push_back(e.id);
        svg = render_curves(sample, ids, l_title);
      }
      emit(svg, lo.out, out);
    }
  } catch (const UsageError& e) {
    error_line(err, "usage", e.what());
    return 2;
  } catch (const std::exception& e) {
    error_line(err, "data", e.what());
    return 1;
  }
  return 0;
}

}  // namespace fdepth
