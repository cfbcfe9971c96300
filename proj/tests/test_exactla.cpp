#include "grinv/errors.hpp"
#include "grinv/exactla.hpp"
#include "grinv/qarith.hpp"

#include <doctest.h>

#include <random>

using namespace grinv;

namespace {

IntegerMatrix random_matrix(std::mt19937_64 &rng, int n, int rank, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  IntegerMatrix a(n, rank), b(rank, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rank; ++j) {
      a(i, j) = d(rng);
      b(j, i) = d(rng);
    }
  return a * b;
}

std::int64_t det_val(const std::vector<mpz_class> &inv, std::uint64_t ell) {
  return profile_from_invariants(inv, ell).weighted_sum();
}

} // namespace

TEST_CASE("snf_diag on small hand examples") {
  IntegerMatrix m(2, 2);
  m << 2, 4, 6, 8;
  CHECK(snf_diag(m) == std::vector<mpz_class>{2, 4});
  m << 1, 0, 0, 0;
  CHECK(snf_diag(m) == std::vector<mpz_class>{1, 0});
  IntegerMatrix d = IntegerMatrix::Zero(3, 3);
  d.diagonal() << 4, 6, 10; // Smith form 2, 2, 60
  CHECK(snf_diag(d) == std::vector<mpz_class>{2, 2, 60});
  CHECK_THROWS_AS(snf_diag(IntegerMatrix::Zero(5, 5), 4), DimensionCap);
}

TEST_CASE("local_profile agrees with the exact Smith form on random matrices") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 9;
    const int rank = trial % 4 == 0 ? n - 1 - trial % 3 : n;
    const IntegerMatrix m = random_matrix(rng, n, std::max(rank, 1), 1 + trial % 5);
    const auto inv = snf_diag(m);
    std::int64_t corank = 0;
    for (const auto &x : inv)
      corank += x == 0;
    for (std::uint64_t ell : {2, 3, 5, 7, 11}) {
      CAPTURE(trial);
      CAPTURE(ell);
      const DivisorProfile expect = profile_from_invariants(inv, ell);
      CHECK(local_profile(m, ell, LocalBounds{det_val(inv, ell), corank}) == expect);
      CHECK(local_profile(m, ell, LocalBounds{std::nullopt, corank}) == expect);
      CHECK(rank_mod(m, ell) == expect.at(0));
    }
  }
}

TEST_CASE("local_profile agrees with the exact Smith form on the small graphs") {
  const Field f = Field::make(2);
  for (auto g : {GraphKind::Grassmann, GraphKind::SkewLines})
    for (auto mk : {MatrixKind::Adjacency, MatrixKind::Laplacian}) {
      const IntegerMatrix m = build_matrix(4, f, g, mk);
      const auto inv = snf_diag(m);
      for (std::uint64_t ell : {2, 3, 5, 7, 11, 13}) {
        const LocalBounds b{det_val(inv, ell), mk == MatrixKind::Laplacian ? 1 : 0};
        CHECK(local_profile(m, ell, b) == profile_from_invariants(inv, ell));
        CHECK(local_profile(m.cast<double>(), ell, b) == profile_from_invariants(inv, ell));
      }
    }
}

TEST_CASE("high precision paths") {
  // ell^P leaves both the double and the 64-bit range.
  const std::int64_t ell = 1000003;
  IntegerMatrix m = IntegerMatrix::Zero(3, 3);
  m(0, 0) = ell * ell * ell * 5;
  m(1, 1) = 7;
  m(2, 2) = ell;
  m(0, 1) = ell;
  const DivisorProfile p = local_profile(m, static_cast<std::uint64_t>(ell), LocalBounds{4, 0});
  CHECK(p == profile_from_invariants(snf_diag(m), static_cast<std::uint64_t>(ell)));
  CHECK(p.weighted_sum() == 4);

  IntegerMatrix two = IntegerMatrix::Zero(4, 4);
  two.diagonal() << 1, 1LL << 20, 1LL << 40, 3;
  two(0, 3) = 1LL << 30;
  CHECK(local_profile(two, 2, LocalBounds{60, 0}) == profile_from_invariants(snf_diag(two), 2));
}

TEST_CASE("failure modes") {
  IntegerMatrix d = IntegerMatrix::Zero(2, 2);
  d.diagonal() << 1, 1LL << 5;
  CHECK_THROWS_AS(local_profile(d, 2, LocalBounds{2, 0}), PrecisionExceeded);
  CHECK_THROWS_AS(local_profile(d, 2, LocalBounds{5, 1}), CorankMismatch);
  CHECK_THROWS_AS(local_profile(IntegerMatrix::Zero(2, 3), 2, LocalBounds{}), DimensionError);
  CHECK_THROWS_AS(local_profile(d, 4, LocalBounds{}), DomainError);
}
