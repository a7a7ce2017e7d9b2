#include "fdepth/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fdepth/error.hpp"
#include "fdepth/statistics.hpp"

namespace fdepth {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<double> to_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string lower(std::string_view s) {
  std::string out(trim(s));
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // data rows, header excluded
};

// Row numbers in messages are 1-based records of the file, header included.
std::string where(std::string_view source, std::size_t data_row, const std::string& column, std::size_t col) {
  return std::string(source) + ": row " + std::to_string(data_row + 2) + ", column " + std::to_string(col + 1) +
         " ('" + column + "')";
}

Table to_table(std::vector<std::vector<std::string>> records, std::string_view source) {
  if (records.empty()) throw ParseError(std::string(source) + ": empty file");
  Table t;
  t.header = std::move(records.front());
  for (auto& h : t.header) h = std::string(trim(h));
  t.rows.assign(std::make_move_iterator(records.begin() + 1), std::make_move_iterator(records.end()));
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.rows[r].size() != t.header.size())
      throw ParseError(std::string(source) + ": row " + std::to_string(r + 2) + " has " +
                       std::to_string(t.rows[r].size()) + " fields, expected " + std::to_string(t.header.size()));
  }
  return t;
}

void require_unique_headers(const std::vector<std::string>& names, std::size_t first, std::string_view source) {
  std::set<std::string> seen;
  for (std::size_t c = first; c < names.size(); ++c) {
    if (!seen.insert(names[c]).second)
      throw ParseError(std::string(source) + ": duplicate column header '" + names[c] + "'");
  }
}

double cell(const Table& t, std::size_t r, std::size_t c, std::string_view source) {
  const auto v = to_number(t.rows[r][c]);
  if (!v) throw ParseError(where(source, r, t.header[c], c) + ": '" + t.rows[r][c] + "' is not a number");
  return *v;
}

bool is_univariate_index(const std::string& header) {
  const std::string h = lower(header);
  return h.empty() || h == "index" || h == "x";
}

TimeGrid grid_from_index(const Table& t, bool has_index) {
  const std::size_t m = t.rows.size();
  TimeGrid grid = TimeGrid::indices(m);
  if (!has_index) return grid;
  std::vector<double> pts;
  bool numeric = true;
  for (std::size_t r = 0; r < m && numeric; ++r) {
    const auto v = to_number(t.rows[r][0]);
    if (!v || !std::isfinite(*v) || (!pts.empty() && *v <= pts.back())) numeric = false;
    else pts.push_back(*v);
  }
  if (numeric) {
    grid.points = std::move(pts);
  } else {
    for (const auto& row : t.rows) grid.labels.emplace_back(trim(row[0]));
  }
  return grid;
}

std::string stem_of(const std::filesystem::path& p) { return p.stem().string(); }

ordered_json params_json(const DepthParams& p) {
  ordered_json j;
  j["J"] = p.J;
  j["K"] = p.K ? ordered_json(*p.K) : ordered_json(nullptr);
  j["containment"] = std::string(to_string(p.containment));
  j["relax"] = p.relax;
  j["seed"] = p.seed ? ordered_json(*p.seed) : ordered_json(nullptr);
  j["tol"] = p.tol ? ordered_json(*p.tol) : ordered_json(nullptr);
  j["deep_check"] = p.deep_check;
  return j;
}

DepthParams params_from_json(const ordered_json& j) {
  DepthParams p;
  if (!j.is_object()) return p;
  if (j.contains("J")) p.J = j.at("J").get<int>();
  if (j.contains("K") && !j.at("K").is_null()) p.K = j.at("K").get<int>();
  if (j.contains("containment")) p.containment = parse_containment(j.at("containment").get<std::string>());
  if (j.contains("relax")) p.relax = j.at("relax").get<bool>();
  if (j.contains("seed") && !j.at("seed").is_null()) p.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("tol") && !j.at("tol").is_null()) p.tol = j.at("tol").get<double>();
  if (j.contains("deep_check")) p.deep_check = j.at("deep_check").get<bool>();
  return p;
}

// Non-finite values have no JSON literal.
ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return exact(v);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw Error("unknown format '" + std::string(name) + "' (valid: json, csv)");
}

std::vector<std::vector<std::string>> read_csv_rows(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;  // current record has content
  auto end_record = [&] {
    if (any || !row.empty()) {
      row.push_back(std::move(field));
      rows.push_back(std::move(row));
    }
    row.clear();
    field.clear();
    any = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"': quoted = true; any = true; break;
      case ',': row.push_back(std::move(field)); field.clear(); any = true; break;
      case '\r': break;
      case '\n': end_record(); break;
      default: field += c; any = true;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field");
  end_record();
  return rows;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::vector<std::vector<std::string>> read_csv_file(const std::filesystem::path& path) {
  try {
    return read_csv_rows(read_text(path));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.starts_with("cannot read")) throw;
    throw ParseError(path.string() + ": " + msg);
  }
}

FunctionalSample parse_univariate_csv_text(std::string_view text, std::string_view source) {
  const Table t = to_table(read_csv_rows(text), source);
  const bool has_index = !t.header.empty() && is_univariate_index(t.header[0]) &&
                         (t.header.size() > 1 || t.header[0].empty());
  const std::size_t first = has_index ? 1 : 0;
  if (t.header.size() <= first) throw ParseError(std::string(source) + ": no curve columns");
  if (t.rows.empty()) throw ParseError(std::string(source) + ": no data rows");
  require_unique_headers(t.header, first, source);

  std::vector<Curve> curves;
  for (std::size_t c = first; c < t.header.size(); ++c) {
    Curve curve{t.header[c], {}};
    curve.values.reserve(t.rows.size());
    for (std::size_t r = 0; r < t.rows.size(); ++r) curve.values.push_back(cell(t, r, c, source));
    curves.push_back(std::move(curve));
  }
  return FunctionalSample(grid_from_index(t, has_index), std::move(curves));
}

FunctionalSample parse_univariate_csv(const std::filesystem::path& path) {
  return parse_univariate_csv_text(read_text(path), path.string());
}

std::vector<std::filesystem::path> list_csv_files(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw ParseError("'" + dir.string() + "' is not a directory");
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".csv") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  if (out.empty()) throw ParseError("no .csv files in '" + dir.string() + "'");
  return out;
}

FunctionalSample parse_multivariate_dir(const std::vector<std::filesystem::path>& paths) {
  if (paths.empty()) throw ParseError("no multivariate curve files given");
  std::vector<MultivariateCurve> curves;
  std::optional<Table> first_table;
  std::filesystem::path first_path;
  TimeGrid grid;
  bool has_index = false;

  for (const auto& path : paths) {
    const std::string source = path.string();
    const Table t = to_table(read_csv_file(path), source);
    if (!first_table) {
      has_index = !t.header.empty() && is_univariate_index(t.header[0]) &&
                  (t.header.size() > 1 || t.header[0].empty());
      if (t.header.size() <= (has_index ? 1u : 0u)) throw ParseError(source + ": no coordinate columns");
      if (t.rows.empty()) throw ParseError(source + ": no data rows");
      require_unique_headers(t.header, has_index ? 1 : 0, source);
      grid = grid_from_index(t, has_index);
      first_table = t;
      first_path = path;
    } else {
      const std::string pair = "'" + first_path.string() + "' and '" + source + "'";
      if (t.header != first_table->header) throw ParseError("headers differ between " + pair);
      if (t.rows.size() != first_table->rows.size()) throw ParseError("row counts differ between " + pair);
      if (has_index) {
        for (std::size_t r = 0; r < t.rows.size(); ++r)
          if (trim(t.rows[r][0]) != trim(first_table->rows[r][0]))
            throw ParseError("index values differ between " + pair + " at row " + std::to_string(r + 2));
      }
    }
    MultivariateCurve curve{stem_of(path), {}};
    const std::size_t first = has_index ? 1 : 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      std::vector<double> v;
      for (std::size_t c = first; c < t.header.size(); ++c) v.push_back(cell(t, r, c, source));
      curve.values.push_back(std::move(v));
    }
    curves.push_back(std::move(curve));
  }
  return FunctionalSample(std::move(grid), std::move(curves));
}

PointCloud parse_pointcloud_csv_text(std::string_view text, std::string_view source) {
  auto records = read_csv_rows(text);
  if (records.empty()) throw ParseError(std::string(source) + ": empty file");
  const bool headerless = std::all_of(records.front().begin(), records.front().end(),
                                      [](const std::string& s) { return to_number(s).has_value(); });
  if (headerless) {
    std::vector<std::string> names;
    for (std::size_t c = 0; c < records.front().size(); ++c) names.push_back("x" + std::to_string(c));
    records.insert(records.begin(), std::move(names));
  }
  const Table t = to_table(std::move(records), source);
  const std::string h0 = t.header.empty() ? "" : lower(t.header[0]);
  const bool has_label = !headerless && (h0.empty() || h0 == "index" || h0 == "id" || h0 == "label");
  const std::size_t first = has_label ? 1 : 0;
  if (t.header.size() <= first) throw ParseError(std::string(source) + ": no coordinate columns");
  if (t.rows.empty()) throw ParseError(std::string(source) + ": no data rows");

  std::vector<std::vector<double>> points;
  std::vector<std::string> ids;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    std::vector<double> p;
    for (std::size_t c = first; c < t.header.size(); ++c) p.push_back(cell(t, r, c, source));
    points.push_back(std::move(p));
    if (has_label) ids.emplace_back(trim(t.rows[r][0]));
  }
  return PointCloud(std::move(points), std::move(ids));
}

PointCloud parse_pointcloud_csv(const std::filesystem::path& path) {
  return parse_pointcloud_csv_text(read_text(path), path.string());
}

std::string fixed6(double v) {
  if (!std::isfinite(v)) return exact(v);
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
  std::string s(buf, r.ptr);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string exact(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string format_result(const DepthResult& result, Format format) {
  const auto entries = ordered(result);
  if (format == Format::csv) {
    std::string out = "id,depth\n";
    for (const auto& e : entries) out += csv_field(e.id) + "," + exact(e.depth) + "\n";
    return out;
  }
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "depth";
  j["method"] = result.method;
  j["params"] = params_json(result.params);
  j["degenerate"] = result.degenerate;
  ordered_json display = ordered_json::object();
  ordered_json list = ordered_json::array();
  for (const auto& e : entries) {
    display[e.id] = fixed6(e.depth);
    list.push_back({{"id", e.id}, {"display", fixed6(e.depth)}, {"value", number(e.depth)}});
  }
  j["depths"] = display;
  j["entries"] = list;
  return dump(j);
}

std::string format_result(const HomogeneityReport& report, Format format) {
  const std::string method(to_string(report.method));
  if (format == Format::csv) {
    std::string out = "method,value,deepest_of_G,deepest_of_F\n";
    out += method + "," + exact(report.value) + "," + csv_field(report.deepest_of_G_id) + "," +
           csv_field(report.deepest_of_F_id.value_or("")) + "\n";
    return out;
  }
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "homogeneity";
  j["method"] = method;
  j["params"] = params_json(report.params);
  j["display"] = fixed6(report.value);
  j["value"] = number(report.value);
  j["deepest_of_G"] = report.deepest_of_G_id;
  j["deepest_of_F"] = report.deepest_of_F_id ? ordered_json(*report.deepest_of_F_id) : ordered_json(nullptr);
  return dump(j);
}

std::string format_matrix(const std::vector<std::vector<double>>& matrix, const std::vector<std::string>& labels,
                          HomogeneityMethod method, const DepthParams& params, Format format) {
  if (matrix.size() != labels.size()) throw Error("matrix and label counts differ");
  if (format == Format::csv) {
    std::string out;
    for (const auto& l : labels) out += "," + csv_field(l);
    out += "\n";
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      out += csv_field(labels[i]);
      for (double v : matrix[i]) out += "," + exact(v);
      out += "\n";
    }
    return out;
  }
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "homogeneity_matrix";
  j["method"] = std::string(to_string(method));
  j["params"] = params_json(params);
  j["groups"] = labels;
  ordered_json values = ordered_json::array();
  ordered_json display = ordered_json::array();
  for (const auto& row : matrix) {
    ordered_json vr = ordered_json::array();
    ordered_json dr = ordered_json::array();
    for (double v : row) {
      vr.push_back(number(v));
      dr.push_back(fixed6(v));
    }
    values.push_back(vr);
    display.push_back(dr);
  }
  j["display"] = display;
  j["matrix"] = values;
  return dump(j);
}

DepthResult parse_result_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || j.value("kind", "") != "depth") throw ParseError("not a depth result document");
    DepthResult r;
    r.method = j.at("method").get<std::string>();
    r.params = params_from_json(j.value("params", ordered_json::object()));
    r.degenerate = j.value("degenerate", false);
    for (const auto& e : j.at("entries")) {
      const auto& v = e.at("value");
      double d = 0.0;
      if (v.is_string()) {
        const auto parsed = to_number(v.get<std::string>());
        if (!parsed) throw ParseError("bad depth value '" + v.get<std::string>() + "'");
        d = *parsed;
      } else {
        d = v.get<double>();
      }
      r.entries.push_back({e.at("id").get<std::string>(), d});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed depth result: ") + e.what());
  }
}

DepthResult read_result_json(const std::filesystem::path& path) {
  try {
    return parse_result_json(read_text(path));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.starts_with("cannot read")) throw;
    throw ParseError(path.string() + ": " + msg);
  }
}

}  // namespace fdepth
