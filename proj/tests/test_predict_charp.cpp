#include "grinv/errors.hpp"
#include "grinv/exactla.hpp"
#include "grinv/predict_charp.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace grinv;

namespace {
const std::vector<std::pair<int, Int>> kGrid{{4, 2}, {5, 2}, {6, 2}, {4, 3}, {5, 3}, {4, 4}, {5, 4}, {6, 3}, {7, 2}};
}

TEST_CASE("d_k examples") {
  CHECK(dk_coeff(4, 2, 2) == 6);
  CHECK(dk_coeff(4, 3, 3) == 16);
  CHECK(dk_coeff(7, 5, 0) == 1);
  CHECK(dk_coeff(4, 2, -1) == 0);
  CHECK(dk_coeff(4, 2, 5) == 0);
  CHECK_THROWS_AS(dk_coeff(4, 4, 1), DomainError);
}

TEST_CASE("d_k alternating sum equals polynomial expansion") {
  for (int n = 1; n <= 8; ++n)
    for (Int p : {2, 3, 5})
      for (Int k = -2; k <= n * (p - 1) + 2; ++k) {
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(k);
        CHECK(mpz_class(static_cast<long>(dk_coeff(n, p, k))) == oracle::poly_coeff(n, p, k));
        CHECK(dk_by_expansion(n, p, k) == dk_coeff(n, p, k));
      }
}

TEST_CASE("tuple sets") {
  CHECK(h_alpha(4, 1, 0) == TupleSet{{2}, {3}});
  CHECK(h_alpha(4, 1, 1) == TupleSet{{1}});
  CHECK(h_alpha(5, 2, 3).empty());
  CHECK(reflected_h(4, 1, 1) == TupleSet{{3}});
  CHECK(gamma_set(4, 1, 0) == TupleSet{{2}});
  CHECK(gamma_set(4, 1, 1) == TupleSet{{1}, {3}});
  CHECK(gamma_set(4, 1, 2).empty());
  CHECK(lambda_vec({1, 3}, 2) == std::vector<Int>{5, -1});
  CHECK(tuple_weight(4, {1, 3}, 2) == 0); // negative λ kills the tuple
  for (int n = 4; n <= 6; ++n)
    for (int t = 1; t <= 2; ++t) {
      std::size_t total = 0;
      for (int a = 0; a <= t; ++a)
        total += h_alpha(n, t, a).size();
      std::size_t expect = 1;
      for (int i = 0; i < t; ++i)
        expect *= static_cast<std::size_t>(n - 1);
      CHECK(total == expect);
    }
}

TEST_CASE("product profile examples") {
  const DivisorProfile p = predict_product_profile(4, 2);
  CHECK(p.at(0) == 6);
  CHECK(p.at(1) == 8);
  CHECK(p.at(2) == 0);
  CHECK(p.at(4) == 1);
  CHECK(p.zero_count == 35 - 15);
  for (auto [n, q] : kGrid) {
    const DivisorProfile pp = predict_product_profile(n, q);
    CHECK(pp.at(4 * brackets(n, q).t) == 1);
    CHECK(pp.zero_count == brackets(n, q).v - brackets(n, q).n1);
  }
}

TEST_CASE("completed profiles") {
  CHECK(predict_charp(4, 2, GraphKind::SkewLines, MatrixKind::Adjacency).to_string() == "0:6 1:14 2:8 3:6 4:1 zero:0");
  CHECK(predict_charp(4, 2, GraphKind::Grassmann, MatrixKind::Adjacency).to_string() == "0:34 1:1 zero:0");
  CHECK(predict_charp(4, 2, GraphKind::Grassmann, MatrixKind::Laplacian).to_string() == "0:34 zero:1");
  CHECK(predict_charp(4, 4, GraphKind::Grassmann, MatrixKind::Adjacency).to_string() == "0:356 2:1 zero:0");
  CHECK_THROWS_AS(predict_charp(3, 2, GraphKind::SkewLines, MatrixKind::Adjacency), DimensionError);
}

TEST_CASE("skew adjacency sums and budget") {
  for (auto [n, q] : kGrid) {
    CAPTURE(n);
    CAPTURE(q);
    const Brackets b = brackets(n, q);
    const int t = b.t;
    for (auto m : {MatrixKind::Adjacency, MatrixKind::Laplacian}) {
      const DivisorProfile p = predict_charp(n, q, GraphKind::SkewLines, m);
      Int low = 0, mid = 0;
      for (int i = 0; i <= t; ++i)
        low += p.at(i);
      for (int i = 2 * t; i <= 3 * t; ++i)
        mid += p.at(i);
      CHECK(low == b.g);
      CHECK(mid == b.f);
      CHECK(p.dimension() == b.v);
      for (const auto &[i, e] : p.mults)
        CHECK(e > 0);
      const auto ell = static_cast<unsigned long>(b.p);
      mpz_class order = oracle::nonzero_eigen_product(n, q, GraphKind::SkewLines, m);
      if (m == MatrixKind::Laplacian)
        order /= oracle::gauss(n, 2, q);
      CHECK(p.weighted_sum() == oracle::valuation(ell, order));
    }
  }
}

TEST_CASE("predictions match elimination on the small cases") {
  for (auto [n, q] : {std::pair<int, Int>{4, 2}, {4, 3}, {5, 2}}) {
    const Field f = Field::make(q);
    const auto p = static_cast<std::uint64_t>(f.p());
    for (auto g : {GraphKind::Grassmann, GraphKind::SkewLines})
      for (auto m : {MatrixKind::Adjacency, MatrixKind::Laplacian}) {
        const IntegerMatrix a = build_matrix(n, f, g, m);
        const LocalBounds b{group_order(n, q, g, m).valuation(p), m == MatrixKind::Laplacian ? 1 : 0};
        CHECK(local_profile(a, p, b) == predict_charp(n, q, g, m));
      }
    const IntegerMatrix prod = build_cross_incidence(n, f, 2, 1) * build_cross_incidence(n, f, 1, 2);
    CHECK(local_profile(prod, p, LocalBounds{std::nullopt, brackets(n, q).v - brackets(n, q).n1}) ==
          predict_product_profile(n, q));
  }
}
