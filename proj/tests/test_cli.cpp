// Runs the built command-line tool and checks exit codes and key output.

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string &args) {
  const std::string cmd = std::string(GRINV_CLI) + " " + args + " 2>/dev/null";
  Result r{-1, {}};
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe))
    r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

} // namespace

TEST_CASE("params") {
  auto r = run("params --n 4 --q 2 --graph skew");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["v"] == 35);
  CHECK(j["k"] == 16);
  CHECK(run("params --n 3 --q 2 --graph skew").code == 2);
  CHECK(run("params --n 4 --q 6 --graph grassmann").code == 2);
  CHECK(run("params --n 4 --q 2 --graph cube").code == 2);
  CHECK(run("params --q 2 --graph skew").code == 2);
}

TEST_CASE("predict and compute agree") {
  auto p = run("predict --n 4 --q 2 --graph skew --matrix adjacency --prime 2");
  auto c = run("compute --n 4 --q 2 --graph skew --matrix adjacency --prime 2");
  REQUIRE(p.code == 0);
  REQUIRE(c.code == 0);
  const auto pj = nlohmann::json::parse(p.out), cj = nlohmann::json::parse(c.out);
  const nlohmann::json expect = {{"0", 6}, {"1", 14}, {"2", 8}, {"3", 6}, {"4", 1}, {"zero", 0}};
  CHECK(pj["primes"][0]["profile"] == expect);
  CHECK(cj["primes"][0]["profile"] == expect);

  p = run("predict --n 4 --q 2 --graph grassmann --matrix laplacian --prime 7");
  const auto j = nlohmann::json::parse(p.out);
  CHECK(j["primes"][0]["profile"] == nlohmann::json({{"0", 15}, {"1", 19}, {"zero", 1}}));
  CHECK(j["primes"][0]["case_id"] == "grassmann-laplacian ell!|q+1 (ii)");

  p = run("predict --n 4 --q 2 --graph skew --matrix adjacency --prime 11");
  CHECK(nlohmann::json::parse(p.out)["primes"][0]["case_id"] == "trivial");

  const auto all = nlohmann::json::parse(run("predict --n 4 --q 2 --graph skew --matrix laplacian --all-primes").out);
  CHECK(all["primes"].size() == 46); // every prime below 200
}

TEST_CASE("compute exact and cap") {
  auto r = run("compute --exact --n 4 --q 2 --graph skew --matrix adjacency");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["invariant_factors"].size() == 35);
  CHECK(j["invariant_factors"][34] == "16");
  CHECK(run("compute --n 6 --q 3 --graph skew --matrix adjacency").code == 3);
  CHECK(run("compute --n 4 --q 3 --graph skew --matrix adjacency --cap 100").code == 3);
  CHECK(run("compute --exact --n 4 --q 3 --graph skew --matrix adjacency").code == 0);
  CHECK(run("compute --exact --n 5 --q 3 --graph skew --matrix adjacency").code == 3);
}

TEST_CASE("verify") {
  CHECK(run("verify --n-max 5 --q 2").code == 0);
  const std::string grid = std::string(GRINV_TMP) + "/cli_grid.json";
  const std::string report = std::string(GRINV_TMP) + "/cli_report.json";
  std::ofstream(grid) << R"({"pairs": [[4,2]], "graphs": ["grassmann"], "jobs": 2})";
  CHECK(run("verify --grid " + grid + " --out " + report).code == 0);
  std::ifstream in(report);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["instances"].size() == 2);
  std::ofstream(grid) << R"({"pairs": [[4,2)";
  CHECK(run("verify --grid " + grid).code == 2);
  CHECK(run("verify").code == 2);
  const auto a = run("verify --n-max 4 --q 2,3 --csv"), b = run("verify --n-max 4 --q 2,3 --csv");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n,q,graph,matrix,ell", 0) == 0);
}
