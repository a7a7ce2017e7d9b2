#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fdepth/homogeneity.hpp"
#include "fdepth/model.hpp"

namespace fdepth {

inline constexpr int kSchemaVersion = 1;

enum class Format { json, csv };
Format parse_format(std::string_view name);

// Minimal RFC 4180 reader: quoted fields, doubled quotes, CRLF, UTF-8 BOM.
// Blank lines are skipped.
std::vector<std::vector<std::string>> read_csv_rows(std::string_view text);
std::vector<std::vector<std::string>> read_csv_file(const std::filesystem::path& path);

// Columns are curves. A first column headed "", "index" or "x" is the index:
// numeric, strictly increasing values become the grid, anything else keeps
// row numbers as the grid and the raw values as labels.
FunctionalSample parse_univariate_csv(const std::filesystem::path& path);
FunctionalSample parse_univariate_csv_text(std::string_view text, std::string_view source = "<input>");

// One multivariate curve per file, id = file stem, columns = coordinates.
// All files must share header, row count and index values.
FunctionalSample parse_multivariate_dir(const std::vector<std::filesystem::path>& paths);
// The *.csv files of a directory, sorted by name.
std::vector<std::filesystem::path> list_csv_files(const std::filesystem::path& dir);

// Rows are points. A first column headed "", "index", "id" or "label" holds
// the ids. A header made only of numbers is read as data.
PointCloud parse_pointcloud_csv(const std::filesystem::path& path);
PointCloud parse_pointcloud_csv_text(std::string_view text, std::string_view source = "<input>");

// "%.6f"-style display string; locale independent.
std::string fixed6(double v);
// Shortest representation that round-trips.
std::string exact(double v);

std::string format_result(const DepthResult& result, Format format);
std::string format_result(const HomogeneityReport& report, Format format);
std::string format_matrix(const std::vector<std::vector<double>>& matrix, const std::vector<std::string>& labels,
                          HomogeneityMethod method, const DepthParams& params, Format format);

// Reads back a depth result written as JSON (entries keep full precision).
DepthResult parse_result_json(std::string_view text);
DepthResult read_result_json(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);
// Throws Error when the file cannot be written.
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace fdepth
