#include <doctest.h>

#include <cstdlib>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "distdist/cli.hpp"
#include "distdist/generators.hpp"
#include "distdist/pointset_io.hpp"

using namespace distdist;
using namespace distdist::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "distdist_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("analyze reports") {
  const auto r = call({"analyze", "--lattice", "4x2"});
  REQUIRE(r.code == kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["D"] == 6);
  CHECK(j["heavy_line"]["count"] == 4);
  CHECK(j["config"]["mode"] == "analyze");
  CHECK(r.out == call({"analyze", "--lattice", "4x2"}).out);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == kInputError);
  CHECK(call({"bogus"}).code == kInputError);
  CHECK(call({"analyze"}).code == kInputError);
  CHECK(call({"analyze", "--lattice", "4by2"}).code == kInputError);
  CHECK(call({"analyze", "--input", "/nonexistent/points.json"}).code == kInputError);
  CHECK(call({"line", "--lattice", "3x3", "--row", "5"}).code == kInputError);
  CHECK(call({"sweep"}).code == kInputError);
  CHECK(call({"sweep", "--alpha", "0.9:0.1:0.1"}).code == kInputError);

  const auto guarded = call({"analyze", "--lattice", "30x30"});
  CHECK(guarded.code == kSizeGuard);
  CHECK(guarded.err.find("--force") != std::string::npos);
  CHECK(guarded.out.empty());

  CHECK(call({"line", "--lattice", "320x2", "--enumerate"}).code == kSizeGuard);
}

TEST_CASE("forcing past the size guard warns") {
  // Cheap to enumerate: P2 far away with pairwise distinct cross distances.
  std::vector<ExactPoint> pts;
  for (std::int64_t x = 0; x < 1000; ++x) pts.push_back({x, 0});
  for (std::int64_t k = 0; k < 101; ++k) pts.push_back({5000 * k + 7, 1000003 + 7919 * k});
  const auto path = scratch() / "wide.json";
  io::write_pointset(path, PointSet(pts));

  CHECK(call({"line", "--input", path.string(), "--enumerate"}).code == kSizeGuard);
  const auto forced = call({"line", "--input", path.string(), "--enumerate", "--force"});
  CHECK(forced.code == kOk);
  CHECK(forced.err.find("warning") != std::string::npos);
  const auto j = nlohmann::json::parse(forced.out);
  CHECK(j["consistent"] == true);

  const auto quiet = call({"line", "--lattice", "6x3", "--enumerate", "--force"});
  CHECK(quiet.code == kOk);
  CHECK(quiet.err.empty());
}

TEST_CASE("line and circle reports") {
  const auto l = call({"line", "--lattice", "8x4", "--row", "0", "--dump-curves", "--enumerate"});
  REQUIRE(l.code == kOk);
  const auto lj = nlohmann::json::parse(l.out);
  CHECK(lj["consistent"] == true);
  CHECK(lj.contains("config"));

  const auto c = call({"circle", "--n", "60", "--alpha", "0.5", "--seed", "3", "--check-lemma41"});
  REQUIRE(c.code == kOk);
  CHECK(nlohmann::json::parse(c.out)["consistent"] == true);
  CHECK(call({"circle"}).code == kInputError);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  const std::vector<std::vector<std::string>> cmds = {
      {"line", "--n", "200", "--alpha", "0.6", "--seed", "5"},
      {"circle", "--n", "90", "--alpha", "0.5", "--seed", "2"},
      {"analyze", "--lattice", "7x5"},
  };
  for (const auto& cmd : cmds) {
    setenv("DISTDIST_THREADS", "1", 1);
    const auto one = call(cmd);
    setenv("DISTDIST_THREADS", "4", 1);
    const auto four = call(cmd);
    unsetenv("DISTDIST_THREADS");
    REQUIRE(one.code == kOk);
    CHECK(one.out == four.out);
    CHECK(one.out == call(cmd).out);
  }
}

TEST_CASE("reports written to a file match stdout") {
  const auto path = scratch() / "report.json";
  const auto to_file = call({"analyze", "--lattice", "3x3", "--out", path.string()});
  REQUIRE(to_file.code == kOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == call({"analyze", "--lattice", "3x3"}).out);
}

TEST_CASE("sweep csv") {
  const auto r = call({"sweep", "--mode", "line", "--alpha", "0.5:0.75:0.25", "--n", "16:64"});
  REQUIRE(r.code == kOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  std::string expected;
  for (const auto& c : sweep_columns()) expected += (expected.empty() ? "" : ",") + c;
  CHECK(header == expected);
  std::size_t rows = 0;
  for (std::string row; std::getline(lines, row);) {
    if (row.empty()) continue;
    ++rows;
    CHECK(std::count(row.begin(), row.end(), ',') + 1 == static_cast<long>(sweep_columns().size()));
  }
  // Two alphas, n = 16, 32, 64.
  CHECK(rows == 6);
  CHECK(call({"sweep", "--mode", "torus", "--alpha", "0.5:0.5:0.1"}).code == kInputError);
}

TEST_CASE("check suites") {
  const auto r = call({"check", "--seed", "4"});
  REQUIRE(r.code == kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["consistent"] == true);
  CHECK(j["suites"].size() == 6);
}

TEST_CASE("flag parsers") {
  const auto a = parse_alpha_range("0.5:1.0:0.125");
  REQUIRE(a.size() == 5);
  CHECK(a.front() == doctest::Approx(0.5));
  CHECK(a.back() == doctest::Approx(1.0));
  CHECK(parse_alpha_range("0.3:0.3:0.1").size() == 1);
  CHECK_THROWS(parse_alpha_range("0.5:1.0"));
  CHECK_THROWS(parse_alpha_range("0.5:1.0:0"));

  CHECK(parse_dims("12x7") == std::pair<std::size_t, std::size_t>{12, 7});
  CHECK_THROWS(parse_dims("12x"));
  CHECK(call({"analyze", "--lattice", "0x3"}).code == kInputError);
  CHECK(call({"line", "--n", "40", "--alpha", "0"}).code == kInputError);

  CHECK(parse_n_range("64:1024") == std::pair<std::size_t, std::size_t>{64, 1024});
  CHECK_THROWS(parse_n_range("1024:64"));
  CHECK_THROWS(parse_n_range("abc"));
}
