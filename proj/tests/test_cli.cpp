#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <random>
#include <sstream>

#include "fdepth/cli.hpp"
#include "fdepth/io.hpp"
#include "fixtures.hpp"

using namespace fdepth;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path dir() {
  static const fs::path d = [] {
    const fs::path p = fs::temp_directory_path() / "fdepth_cli_test";
    fs::remove_all(p);
    fs::create_directories(p);
    write_text(p / "six_curves.csv", fixtures::six_curves_csv());
    write_text(p / "shifted.csv",
               ",g_0,g_1,g_2,g_3\n0,100,101,102,103\n1,100,101,102,103\n2,100,101,102,103\n3,100,101,102,103\n"
               "4,100,101,102,103\n");
    write_text(p / "cloud.csv", "x,y\n0,0\n4,0\n0,4\n1,1\n3,3\n");
    // 40 curves for resampling runs
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0, 1);
    std::string big = "";
    for (int i = 0; i < 40; ++i) big += ",c" + std::to_string(i);
    big += "\n";
    std::vector<double> scale(40);
    for (auto& s : scale) s = u(rng);
    for (int t = 0; t < 12; ++t) {
      big += std::to_string(t);
      for (int i = 0; i < 40; ++i) big += "," + exact(scale[i] * std::sin(0.3 * t + 1) + 0.01 * u(rng));
      big += "\n";
    }
    write_text(p / "big.csv", big);
    return p;
  }();
  return d;
}

std::string path(const std::string& name) { return (dir() / name).string(); }

nlohmann::json error_of(const Run& r) { return nlohmann::json::parse(r.err.substr(0, r.err.find('\n'))); }

}  // namespace

TEST_CASE("functional depth of the worked example") {
  const Run r = cli({"functional", "--input", path("six_curves.csv"), "--J", "2", "--quiet"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["depths"]["f_3"] == "0.400000");
  CHECK(j["depths"]["f_5"] == "0.266667");
  CHECK(j["entries"][0]["value"] == 0.4);

  const Run csv = cli({"functional", "--input", path("six_curves.csv"), "--format", "csv", "--quiet"});
  CHECK(csv.out.starts_with("id,depth\nf_3,0.4\n"));
}

TEST_CASE("progress goes to stderr unless quiet") {
  const Run loud = cli({"functional", "--input", path("six_curves.csv")});
  CHECK(loud.code == 0);
  CHECK(loud.err.find("progress 100%") != std::string::npos);
  const Run quiet = cli({"functional", "--input", path("six_curves.csv"), "--quiet"});
  CHECK(quiet.out == loud.out);
  CHECK(quiet.err.empty());
}

TEST_CASE("output files and stats") {
  const std::string out = path("r.json");
  REQUIRE(cli({"functional", "--input", path("six_curves.csv"), "--out", out, "--quiet"}).code == 0);
  const Run ord = cli({"stats", "--depths", out, "ordered"});
  CHECK(ord.out == "id,depth\nf_3,0.400000\nf_5,0.266667\nf_1,0.200000\nf_2,0.200000\nf_0,0.000000\nf_4,0.000000\n");
  CHECK(cli({"stats", "--depths", out, "deepest", "1"}).out == "id,depth\nf_3,0.400000\n");
  CHECK(cli({"stats", "--depths", out, "outlying", "1"}).out == "id,depth\nf_0,0.000000\nf_4,0.000000\n");
  CHECK(cli({"stats", "--depths", out, "central", "0.5"}).out ==
        "id,depth\nf_3,0.400000\nf_5,0.266667\nf_1,0.200000\nf_2,0.200000\n");
  const auto j = nlohmann::json::parse(cli({"stats", "--depths", out, "deepest", "--format", "json"}).out);
  CHECK(j["entries"][0]["id"] == "f_3");
  CHECK(cli({"stats", "--depths", out, "deepest", "9"}).code == 1);
  CHECK(cli({"stats", "--depths", out, "median"}).code == 2);
  CHECK(cli({"stats", "--depths", out, "deepest", "x"}).code == 2);
}

TEST_CASE("point clouds") {
  const Run r = cli({"pointcloud", "--input", path("cloud.csv"), "--quiet"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["method"] == "simplicial_depth");
  CHECK(j["params"]["containment"] == "simplex");
  for (const char* c : {"oja", "mahalanobis", "l1"})
    CHECK(cli({"pointcloud", "--input", path("cloud.csv"), "--containment", c, "--quiet"}).code == 0);
  CHECK(cli({"pointcloud", "--input", path("cloud.csv"), "--containment", "r2", "--quiet"}).code == 1);
  const Run bad = cli({"pointcloud", "--input", path("cloud.csv"), "--containment", "tukey"});
  CHECK(bad.code == 2);
  CHECK(error_of(bad)["error"]["message"].get<std::string>().find("mahalanobis") != std::string::npos);
}

TEST_CASE("homogeneity") {
  const Run same = cli({"homogeneity", "--f", path("six_curves.csv"), "--g", path("six_curves.csv"), "--method", "p2",
                        "--quiet"});
  REQUIRE(same.code == 0);
  CHECK(nlohmann::json::parse(same.out)["display"] == "0.000000");
  const Run far = cli({"homogeneity", "--f", path("six_curves.csv"), "--g", path("shifted.csv"), "--method", "p1",
                       "--quiet"});
  CHECK(nlohmann::json::parse(far.out)["value"] == 0.0);
  const Run p3 = cli({"homogeneity", "--f", path("six_curves.csv"), "--g", path("six_curves.csv"), "--method", "p3"});
  CHECK(p3.code == 2);
  CHECK(error_of(p3)["error"]["message"].get<std::string>().find("Flores") != std::string::npos);
}

TEST_CASE("matrix and heatmap") {
  const std::string svg = path("heat.svg");
  const Run r = cli({"matrix", "--groups", path("six_curves.csv"), path("six_curves.csv"), path("shifted.csv"), "--method", "p2",
                     "--heatmap", svg, "--format", "csv", "--quiet"});
  REQUIRE(r.code == 0);
  CHECK(r.out.starts_with(",six_curves,six_curves,shifted\nsix_curves,0,0,"));
  CHECK(fs::exists(svg));
  CHECK(read_text(svg).find("<svg") != std::string::npos);
}

TEST_CASE("plots") {
  const std::string out = path("r2.json");
  REQUIRE(cli({"functional", "--input", path("six_curves.csv"), "--out", out, "--quiet"}).code == 0);
  const Run deep = cli({"plot", "deepest", "1", "--input", path("six_curves.csv"), "--depths", out});
  REQUIRE(deep.code == 0);
  CHECK(deep.out.find("<polyline fill=\"none\" stroke=\"#d62728\"") != std::string::npos);
  const Run computed = cli({"plot", "outlying", "1", "--input", path("six_curves.csv"), "--quiet"});
  REQUIRE(computed.code == 0);
  const Run dots = cli({"plot", "depths", "--input", path("cloud.csv"), "--quiet", "--out", path("dots.svg")});
  CHECK(dots.code == 0);
  CHECK(dots.out.empty());
  CHECK(read_text(path("dots.svg")).find("<circle") != std::string::npos);
  CHECK(cli({"plot", "deepest", "2", "--input", path("cloud.csv"), "--pointcloud", "--quiet"}).code == 0);
  CHECK(cli({"plot", "sideways", "--input", path("six_curves.csv")}).code == 2);
}

TEST_CASE("exit codes and error format") {
  const Run usage = cli({"functional", "--bogus"});
  CHECK(usage.code == 2);
  CHECK(error_of(usage)["error"]["kind"] == "usage");
  CHECK(cli({}).code == 2);
  CHECK(cli({"functional"}).code == 2);
  CHECK(cli({"functional", "--input", path("six_curves.csv"), "--J", "1"}).code == 2);
  CHECK(cli({"functional", "--input", path("six_curves.csv"), "--format", "xml"}).code == 2);
  const Run missing = cli({"functional", "--input", path("nope.csv")});
  CHECK(missing.code == 1);
  CHECK(error_of(missing)["error"]["kind"] == "data");
  CHECK(cli({"functional", "--input", path("six_curves.csv"), "--J", "6", "--quiet"}).code == 1);
  CHECK(cli({"functional", "--input", path("six_curves.csv"), "--out", path("no/dir/x.json"), "--quiet"}).code == 1);
  const Run help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("functional") != std::string::npos);
  const Run version = cli({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out.find(kVersion) != std::string::npos);
  CHECK(version.out.find("schema") != std::string::npos);
}

TEST_CASE("seeded runs are byte identical") {
  const std::vector<std::string> base{"functional", "--input", path("big.csv"), "--K", "4", "--seed", "7", "--quiet"};
  auto with_threads = [&](const char* t) {
    auto a = base;
    a.insert(a.end(), {"--threads", t});
    return cli(a);
  };
  const Run a = with_threads("1"), b = with_threads("1"), c = with_threads("8");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(nlohmann::json::parse(a.out)["params"]["seed"] == 7);
  const Run other = cli({"functional", "--input", path("big.csv"), "--K", "4", "--seed", "8", "--quiet"});
  CHECK(other.out != a.out);
}
