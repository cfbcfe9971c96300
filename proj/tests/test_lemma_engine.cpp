#include "grinv/errors.hpp"
#include "grinv/lemma_engine.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace grinv;

namespace {

DivisorProfile to_profile(const std::vector<long> &e, long kernel, std::uint64_t prime) {
  DivisorProfile p;
  p.prime = prime;
  p.zero_count = kernel;
  for (std::size_t i = 0; i < e.size(); ++i)
    p.add(static_cast<int>(i), e[i]);
  return p;
}

} // namespace

TEST_CASE("worked staircases") {
  // One rung with a kernel: e_a = f - 1, e_0 = g + 1.
  LemmaInput in{13, 35, 1, {{1, 14}}};
  auto p = resolve_multiplicities(in, 5);
  CHECK(p.to_string() == "0:21 1:13 zero:1");
  // Two rungs.
  in = {34, 35, 1, {{1, 22}, {2, 14}}};
  CHECK(resolve_multiplicities(in, 3).to_string() == "0:13 1:8 2:13 zero:1");
  // Nothing at all.
  in = {0, 35, 0, {}};
  CHECK(resolve_multiplicities(in, 11).to_string() == "0:35 zero:0");
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(resolve_multiplicities({12, 35, 1, {{1, 14}}}, 5), InconsistentBudget);
  CHECK_THROWS_AS(resolve_multiplicities({1, 35, 0, {}}, 5), InconsistentBudget);
  CHECK_THROWS_AS(resolve_multiplicities({0, 35, 0, {{0, 4}}}, 5), MonotonicityError);
  CHECK_THROWS_AS(resolve_multiplicities({9, 35, 0, {{2, 4}, {1, 3}}}, 5), MonotonicityError);
  CHECK_THROWS_AS(resolve_multiplicities({9, 35, 0, {{1, 4}, {2, 4}}}, 5), MonotonicityError);
  CHECK_THROWS_AS(resolve_multiplicities({40, 35, 0, {{1, 40}}}, 5), MonotonicityError);
  CHECK_THROWS_AS(resolve_multiplicities({0, 3, 4, {}}, 5), MonotonicityError);
}

TEST_CASE("the staircase forces a unique profile (exhaustive, ambient <= 8)") {
  constexpr int kMaxStep = 4, kMaxProfileExp = 5;
  long staircases = 0;
  for (long ambient = 1; ambient <= 8; ++ambient)
    for (long kernel = 0; kernel <= 1 && kernel <= ambient; ++kernel)
      oracle::for_each_staircase(ambient, kernel, kMaxStep, [&](const std::vector<std::pair<long, long>> &st) {
        ++staircases;
        const long d = oracle::staircase_budget(kernel, st);
        LemmaInput in{d, ambient, kernel, {}};
        for (const auto &[a, b] : st)
          in.steps.push_back({a, b});
        const DivisorProfile got = resolve_multiplicities(in, 2);

        const auto fits = oracle::staircase_solutions(ambient, kernel, d, kMaxProfileExp, st);
        REQUIRE(fits.size() == 1);
        CHECK(to_profile(fits.front(), kernel, 2) == got);
        CHECK(got.dimension() == ambient);
        CHECK(got.weighted_sum() == d);

        LemmaInput off = in;
        off.d = d + 1;
        CHECK_THROWS_AS(resolve_multiplicities(off, 2), InconsistentBudget);
      });
  CHECK(staircases > 1000);
}
