#include "grinv/errors.hpp"
#include "grinv/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace grinv;

TEST_CASE("relevant primes") {
  CHECK(relevant_primes(4, 2, GraphKind::SkewLines, MatrixKind::Adjacency) == std::vector<std::uint64_t>{2});
  CHECK(relevant_primes(4, 2, GraphKind::Grassmann, MatrixKind::Laplacian) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(relevant_primes(4, 2, GraphKind::Grassmann, MatrixKind::Adjacency) == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("single instances") {
  auto r = verify_instance(4, 2, GraphKind::SkewLines, MatrixKind::Adjacency);
  CHECK(r.ok());
  CHECK(r.per_prime.size() == 1);
  r = verify_instance(4, 2, GraphKind::Grassmann, MatrixKind::Laplacian);
  CHECK(r.ok());
  CHECK(r.per_prime.size() == 4);
  r = verify_instance(4, 3, GraphKind::Grassmann, MatrixKind::Adjacency);
  CHECK(r.ok());
  VerifyOptions extra;
  extra.extra_primes = {11, 13, 3};
  extra.jobs = 3;
  r = verify_instance(4, 2, GraphKind::SkewLines, MatrixKind::Laplacian, extra);
  CHECK(r.ok());
  CHECK(r.per_prime.size() == 6); // 2, 5, 7 plus 3, 11, 13
  CHECK(r.per_prime.back().case_id == "trivial");
  VerifyOptions tiny;
  tiny.cap = 34;
  CHECK_THROWS_AS(verify_instance(4, 2, GraphKind::SkewLines, MatrixKind::Laplacian, tiny), DimensionCap);
}

TEST_CASE("a wrong prediction is reported, not hidden") {
  auto r = verify_instance(4, 2, GraphKind::SkewLines, MatrixKind::Adjacency);
  r.per_prime[0].predicted.add(0, -1);
  r.per_prime[0].predicted.add(1, 1);
  r.per_prime[0].match = r.per_prime[0].predicted == r.per_prime[0].computed;
  CHECK_FALSE(r.ok());
  CHECK(describe_mismatches(r).find("MISMATCH") != std::string::npos);
  CHECK(describe_mismatches(r).find("char-p") != std::string::npos);
}

TEST_CASE("grid config parsing") {
  auto cfg = parse_grid_config(nlohmann::json::parse(R"({"pairs": [[4,2],[4,3]], "graphs": ["skew"],
      "matrices": ["laplacian"], "primes": [11], "cap": 200, "jobs": 2})"));
  CHECK(cfg.pairs.size() == 2);
  CHECK(cfg.graphs == std::vector<GraphKind>{GraphKind::SkewLines});
  CHECK(cfg.matrices == std::vector<MatrixKind>{MatrixKind::Laplacian});
  CHECK(cfg.cap == 200);
  CHECK(cfg.jobs == 2);
  for (const char *bad : {R"([])", R"({})", R"({"pairs": [[4]]})", R"({"pairs": [[3,2]]})",
                          R"({"pairs": [[4,6]]})", R"({"pairs": [[4,2]], "graphs": ["cube"]})",
                          R"({"pairs": [[4,2]], "primes": [4]})", R"({"pairs": [[4,2]], "jobs": 0})",
                          R"({"pairs": [[4,2]], "cap": "big"})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_grid_config(nlohmann::json::parse(bad)), ConfigError);
  }
}

TEST_CASE("grid runs are ordered, deterministic and serializable") {
  GridConfig cfg;
  CHECK(verify_grid(cfg).empty());
  cfg.pairs = {{4, 2}, {4, 3}};
  cfg.jobs = 3;
  const auto a = verify_grid(cfg);
  cfg.jobs = 1;
  const auto b = verify_grid(cfg);
  REQUIRE(a.size() == 8);
  CHECK(reports_to_json(a).dump() == reports_to_json(b).dump());
  CHECK(a[0].graph == GraphKind::Grassmann);
  CHECK(a[0].matrix == MatrixKind::Adjacency);
  CHECK(a[7].q == 3);
  for (const auto &r : a)
    CHECK(r.ok());

  const auto j = reports_to_json(a);
  const auto &inst = j["instances"][0];
  for (const char *key : {"n", "q", "graph", "matrix", "primes", "order_check", "srg_identity"})
    CHECK(inst.contains(key));
  const auto &prime = inst["primes"][0];
  for (const char *key : {"ell", "case_id", "predicted", "computed", "match"})
    CHECK(prime.contains(key));
  CHECK(prime["predicted"].contains("zero"));

  const std::string csv = reports_to_csv(a);
  std::size_t rows = 0;
  for (const auto &r : a)
    rows += r.per_prime.size();
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == rows + 1);

  cfg.cap = 100;
  CHECK_THROWS_AS(verify_grid(cfg), DimensionCap);
}

TEST_CASE("srg identities detect a broken matrix") {
  IntegerMatrix m = build_matrix(4, Field::make(2), GraphKind::SkewLines, MatrixKind::Adjacency);
  CHECK(srg_identities_hold(m, 4, 2, GraphKind::SkewLines, MatrixKind::Adjacency));
  m(0, 1) = 1 - m(0, 1);
  CHECK_FALSE(srg_identities_hold(m, 4, 2, GraphKind::SkewLines, MatrixKind::Adjacency));
}
