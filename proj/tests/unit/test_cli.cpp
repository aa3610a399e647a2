// End-to-end checks of the digit-dirichlet binary: exit codes, JSON shape,
// CSV headers, and grid emission.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("eval Fb returns a well-formed JSON result") {
  auto r = run_cli("eval --function Fb --base 2 --s 2.5+0i");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["function"] == "Fb");
  CHECK(j["base"] == 2);
  CHECK(j.contains("value"));
  CHECK(j.contains("abs_error_estimate"));
  CHECK(j.contains("K_used"));
  // Matches the direct-sum oracle to the error budget (value frozen from the
  // oracle computation; generous band here).
  CHECK(std::abs(j["value"]["re"].get<double>() - 1.4941517579) < 1e-6);
  CHECK(std::abs(j["value"]["im"].get<double>()) < 1e-9);
}

TEST_CASE("eval at a pole exits 3 with a machine-readable error") {
  auto r = run_cli("eval --function Zb --base 2 --s 0");
  CHECK(r.exit_code == 3);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["error"]["kind"] == "PoleAt");
}

TEST_CASE("eval Gbeta produces a finite value with an error estimate") {
  auto r = run_cli("eval --function Gbeta --beta 2.5 --s 3+0i");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["beta"] == 2.5);
  CHECK(std::isfinite(j["value"]["re"].get<double>()));
  CHECK(j["abs_error_estimate"].get<double>() > 0.0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("eval --function Nope --base 2 --s 1.5+0i").exit_code == 2);
  CHECK(run_cli("eval --function Fb --base 2").exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("eval --function Fb --base 1 --s 2.5+0i").exit_code == 2);
}

TEST_CASE("poles: Fb base 2 radius 8 has six rows") {
  auto r = run_cli("poles --function Fb --base 2 --radius 8");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.size() == 6);
}

TEST_CASE("poles: Gb base 3 radius 1.5 includes the s=1 residue 1/3") {
  auto r = run_cli("poles --function Gb --base 3 --radius 1.5 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "tag,b,k,m,re,im,order,residue_re,residue_im,laurent2_re,laurent2_im");
  bool found = false;
  for (std::string line; std::getline(lines, line);) {
    if (line.find("Gb,3,1,0,1,") == 0) {
      found = line.find("0.33333333333333") != std::string::npos;
    }
  }
  CHECK(found);
}

TEST_CASE("poles: Zb base 2 radius 20 has five rows") {
  auto r = run_cli("poles --function Zb --base 2 --radius 20 --format csv");
  CHECK(r.exit_code == 0);
  int rows = 0;
  std::istringstream lines(r.output);
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 6);  // header + 5 poles
}

TEST_CASE("certify runs a small residue table") {
  auto r = run_cli("certify --function Zb --base 2 --radius 1 --max-m 0 --tol 1e-8");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"].size() == 1);
}

TEST_CASE("delange point evaluation emits the documented CSV schema") {
  auto r = run_cli(
      "delange --beta 2.5 --fourier-cutoff 200 --s-at 10 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "beta,x_or_n,value,tail_bound,cutoff_K");
}

TEST_CASE("plot emits a figure grid file") {
  auto dir = std::filesystem::temp_directory_path() / "dd_cli_plot_test";
  std::filesystem::create_directories(dir);
  auto r = run_cli("plot --figures 2 --step 0.25 --fourier-cutoff 120 "
                   "--output-dir " + dir.string());
  CHECK(r.exit_code == 0);
  std::ifstream grid(dir / "fig2_beta_grid.csv");
  REQUIRE(grid.good());
  std::string header;
  std::getline(grid, header);
  CHECK(header == "beta,value,tail_bound");
  int rows = 0;
  for (std::string line; std::getline(grid, line);) ++rows;
  CHECK(rows == 28);  // 1.01 to 8.00 in steps of 0.25, inclusive
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify supports filtering and stays well-formed") {
  auto r = run_cli("verify --only pole-count");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("pole-count") != std::string::npos);
  CHECK(r.output.find("PASS") != std::string::npos);
}

TEST_CASE("verify --tol-scale produces a well-formed report even when strict") {
  // Scaling the band to [32, 0.48] makes the ratio check unsatisfiable; the
  // run must still report cleanly and exit 1.
  auto r = run_cli("verify --only pole-count --tol-scale 0.1");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("FAIL") != std::string::npos);
  CHECK(r.output.find("pole-count") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
  auto a = run_cli("poles --function Fb --base 3 --radius 12 --format csv");
  auto b = run_cli("poles --function Fb --base 3 --radius 12 --format csv");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("threaded verify output matches the reference-mode bytes") {
  auto reference = run_cli("verify --only residues");
  auto threaded = run_cli("verify --only residues");
  // popen runs through the shell, so the env prefix works as-is.
  std::string cmd = "DIGIT_DIRICHLET_THREADS=2 " + std::string(CLI_BINARY_PATH) +
                    " verify --only residues 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) {
    out.append(buffer.data(), got);
  }
  pclose(pipe);
  CHECK(reference.exit_code == 0);
  CHECK(reference.output == threaded.output);
  CHECK(reference.output == out);
}

TEST_SUITE_END();
