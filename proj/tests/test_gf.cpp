#include "grinv/errors.hpp"
#include "grinv/gf.hpp"

#include <doctest.h>

using namespace grinv;

TEST_CASE("field axioms hold exhaustively for small orders") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const Field f = Field::make(q);
    REQUIRE(f.q() == q);
    for (int i = 0; i < q; ++i) {
      const FieldScalar a = f.element(i);
      CHECK(f.add(a, f.zero()) == a);
      CHECK(f.mul(a, f.one()) == a);
      CHECK(f.add(a, f.neg(a)) == f.zero());
      if (a != f.zero())
        CHECK(f.mul(a, f.inv(a)) == f.one());
      for (int j = 0; j < q; ++j) {
        const FieldScalar b = f.element(j);
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int k = 0; k < q; ++k) {
          const FieldScalar c = f.element(k);
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("multiplicative group is cyclic of order q - 1") {
  for (int q : {4, 8, 9, 16, 25, 27}) {
    CAPTURE(q);
    const Field f = Field::make(q);
    bool found = false;
    for (int i = 1; i < q && !found; ++i) {
      const FieldScalar g = f.element(i);
      int order = 1;
      for (FieldScalar x = g; x != f.one(); x = f.mul(x, g))
        ++order;
      found = order == q - 1;
    }
    CHECK(found);
    for (int i = 1; i < q; ++i)
      CHECK(f.pow(f.element(i), static_cast<std::uint64_t>(q - 1)) == f.one());
  }
}

TEST_CASE("modulus choice is the smallest monic irreducible") {
  CHECK(Field::make(4).modulus() == std::vector<int>{1, 1, 1});    // x^2 + x + 1
  CHECK(Field::make(8).modulus() == std::vector<int>{1, 1, 0, 1}); // x^3 + x + 1
  CHECK(Field::make(9).modulus() == std::vector<int>{1, 0, 1});    // x^2 + 1
}

TEST_CASE("coefficient round trip") {
  const Field f = Field::make(27);
  for (int i = 0; i < 27; ++i) {
    const auto c = f.coeffs(f.element(i));
    CHECK(f.from_coeffs(c) == f.element(i));
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Field::make(6), NotAPrimePower);
  CHECK_THROWS_AS(Field::make(12), NotAPrimePower);
  CHECK_THROWS_AS(Field::make(1), DomainError);
  CHECK_THROWS_AS(Field::make(512), DomainError);
  CHECK_THROWS_AS(Field::make(5).inv(FieldScalar{0}), DivisionByZero);
  const auto pp = split_prime_power(81);
  CHECK(pp.p == 3);
  CHECK(pp.t == 4);
}
