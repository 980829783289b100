#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gabor/cli.hpp"
#include "gabor/io.hpp"
#include "gabor/metaplectic.hpp"

using namespace gabor;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gabor");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gabor_cli_test_" + name);
}

}  // namespace

TEST_CASE("certify examples") {
  auto r = run_cli({"certify", "--window", "gaussian", "--delta", "0.9985"});
  REQUIRE(r.code == cli::kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["status"] == "Certified");
  CHECK(j["schema"] == "gabor.certify/1");
  CHECK(j["margin"].get<double>() > 0.0);

  r = run_cli({"certify", "--window", "hermite:1", "--dilation", "1", "--delta", "0.5"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(json::parse(r.out)["status"] == "Inconclusive");

  r = run_cli({"certify", "--window", "hermite:1", "--a", "0.7", "--b", "0.5"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(json::parse(r.out)["status"] == "Certified");

  r = run_cli({"certify", "--window", "gaussian", "--basis", "0.5,0,0,1"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(json::parse(r.out)["delta_tested"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("iwasawa example") {
  const auto r = run_cli({"iwasawa", "--basis", "1,0,0,1"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["scale"] == 1);
  CHECK(j["r"] == 0);
  CHECK(j["q"] == 0);
  CHECK(j["a"] == 1);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"certify", "--window", "gaussian", "--bogus", "1"}).code == cli::kExitUsage);
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run_cli({"--help"}).code == cli::kExitOk);
  CHECK(run_cli({"certify", "--window", "parabola", "--delta", "1"}).code ==
        cli::kExitPrecondition);
  CHECK(run_cli({"certify", "--window", "gaussian", "--dilation", "-1", "--delta", "1"}).code ==
        cli::kExitPrecondition);
  CHECK(run_cli({"certify", "--window", "gaussian"}).code == cli::kExitPrecondition);
  CHECK(run_cli({"iwasawa", "--basis", "1,2,2,4"}).code == cli::kExitPrecondition);
  CHECK(run_cli({"oracle", "--window", "gaussian", "--a", "0.9", "--b", "1"}).code ==
        cli::kExitPrecondition);
  CHECK(run_cli({"profile", "--window", "file:/nonexistent/window.csv"}).code ==
        cli::kExitPrecondition);
  CHECK(run_cli({"profile", "--window", "gaussian", "--grid-points", "10"}).code ==
        cli::kExitPrecondition);
}

TEST_CASE("profile round trip") {
  const auto r = run_cli({"profile", "--window", "gaussian", "--grid-points", "101"});
  REQUIRE(r.code == cli::kExitOk);
  std::istringstream in(r.out);
  const auto rows = io::read_profile_csv(in);
  CHECK(rows.size() > 101);
  double min_low = 1e300;
  for (const auto& row : rows) min_low = std::min(min_low, row.delta_g_low);
  const auto pos = r.err.find("min_value=");
  REQUIRE(pos != std::string::npos);
  const double reported = std::stod(r.err.substr(pos + 10));
  CHECK(min_low == reported);
}

TEST_CASE("tail tolerance from the environment") {
  setenv("GABOR_TAIL_TOL", "1e-4", 1);
  auto loose = run_cli({"profile", "--window", "gaussian", "--grid-points", "3"});
  setenv("GABOR_TAIL_TOL", "not-a-number", 1);
  auto bad = run_cli({"profile", "--window", "gaussian", "--grid-points", "3"});
  auto flag = run_cli({"profile", "--window", "gaussian", "--grid-points", "3", "--tail-tol", "1e-12"});
  unsetenv("GABOR_TAIL_TOL");
  auto strict = run_cli({"profile", "--window", "gaussian", "--grid-points", "3"});
  CHECK(loose.code == cli::kExitOk);
  CHECK(bad.code == cli::kExitPrecondition);
  CHECK(strict.out == flag.out);
  CHECK(loose.out != strict.out);
}

TEST_CASE("sampled window files") {
  const auto path = temp_path("window.csv");
  {
    std::ofstream f(path);
    io::write_sampled_csv(f, sample(hermite(1)));
  }
  const auto r = run_cli({"certify", "--window", "file:" + path.string(), "--delta", "0.45",
                          "--grid-points", "21"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["rigorous"] == false);
  std::filesystem::remove(path);
}

TEST_CASE("outputs are deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"gaussian-cert"},
      {"barrier-scan", "--b-min", "0.5", "--b-max", "2", "--steps", "5"},
      {"iwasawa", "--basis", "0.3,1.2,-0.8,0.9"},
      {"reduce", "--window", "hermite:1", "--basis", "1,0,0.5,1"},
      {"oracle", "--window", "gaussian", "--a", "0.5", "--b", "1", "--N", "60"},
      {"profile", "--window", "hermite:3", "--grid-points", "11"},
  };
  for (const auto& c : commands) {
    const auto first = run_cli(c);
    const auto second = run_cli(c);
    CHECK(first.code == cli::kExitOk);
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());
  }
}

TEST_CASE("output files") {
  const auto path = temp_path("scan.csv");
  const auto r = run_cli({"barrier-scan", "--b-min", "1", "--b-max", "1", "--steps", "1",
                          "--output", path.string()});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "b,delta0_low,delta0,delta0_high,log_gap_to_half");
  std::filesystem::remove(path);
}

TEST_CASE("reduce reports the effective co-volume") {
  const auto r = run_cli({"reduce", "--window", "gaussian", "--basis", "0.7,0,0,0.5"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["delta_eff"].get<double>() == doctest::Approx(0.35));
  CHECK(j["reduced_window"] == "dilate(gaussian,0.5)");
}
