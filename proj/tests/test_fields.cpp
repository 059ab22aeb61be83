#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modblocks/fields.hpp"
#include "modblocks/util.hpp"

using namespace modblocks;
using fields::Field;
using fields::scalar;

TEST_CASE("prime fields and deterministic moduli") {
  Field f2 = Field::make(2, 1);
  CHECK(f2.q() == 2);
  CHECK(f2.modulus() == std::vector<unsigned>{0, 1});  // x, the degree-1 convention

  Field f4 = Field::make(2, 2);
  CHECK(f4.modulus() == std::vector<unsigned>{1, 1, 1});  // x^2+x+1

  Field f16 = Field::make(2, 4);
  CHECK(f16.q() == 16);
  CHECK(f16.modulus() == std::vector<unsigned>{1, 0, 0, 1, 1});  // x^4+x^3+1

  Field f64 = Field::make(2, 6);
  CHECK(f64.modulus() == std::vector<unsigned>{1, 0, 0, 0, 0, 1, 1});  // x^6+x^5+1

  Field f9 = Field::make(3, 2);
  CHECK(f9.modulus() == std::vector<unsigned>{1, 0, 1});  // x^2+1

  Field f27 = Field::make(3, 3);
  CHECK(f27.modulus() == std::vector<unsigned>{1, 0, 2, 1});  // x^3+2x^2+1

  Field f81 = Field::make(3, 4);
  CHECK(f81.q() == 81);

  CHECK_THROWS_AS(Field::make(4, 1), InputError);
  CHECK_THROWS_AS(Field::make(7, 1), InputError);
  CHECK_THROWS_AS(Field::make(2, 0), InputError);
  CHECK_THROWS_AS(Field::make(2, 13), InputError);
}

TEST_CASE("field axioms on random samples") {
  for (auto [p, m] : {std::pair{2u, 1u}, {2u, 4u}, {2u, 6u}, {3u, 1u}, {3u, 4u}, {5u, 2u}}) {
    Field F = Field::make(p, m);
    SplitMix64 rng(0x1234 + p * 100 + m);
    CHECK(F.inv(1) == 1);
    for (int t = 0; t < 200; ++t) {
      scalar x = scalar(rng.below(F.q()));
      scalar y = scalar(rng.below(F.q()));
      scalar z = scalar(rng.below(F.q()));
      CHECK(F.add(x, y) == F.add(y, x));
      CHECK(F.mul(x, y) == F.mul(y, x));
      CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
      CHECK(F.add(x, F.neg(x)) == 0);
      if (x) CHECK(F.mul(x, F.inv(x)) == 1);
      if (x) CHECK(F.pow(x, F.q() - 1) == 1);
      CHECK(F.pow(x, F.q()) == x);  // x^q = x
      // Frobenius is a ring endomorphism
      CHECK(F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y)));
      CHECK(F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y)));
      CHECK(F.pow_p_inverse(F.pow_p(x, 3), 3) == x);
    }
  }
}

TEST_CASE("frobenius fixes the prime field") {
  Field F = Field::make(2, 1);
  CHECK(F.frobenius(0) == 0);
  CHECK(F.frobenius(1) == 1);
  Field F3 = Field::make(3, 4);
  for (scalar c : {0u, 1u, 2u}) CHECK(F3.pow(c, 3) == F3.mul(F3.mul(c, c), c));
}

TEST_CASE("digits round-trip the packed representation") {
  Field F = Field::make(3, 4);
  SplitMix64 rng(99);
  for (int t = 0; t < 50; ++t) {
    scalar x = scalar(rng.below(F.q()));
    CHECK(F.from_digits(F.digits(x)) == x);
  }
}

TEST_CASE("splitting_degree is the multiplicative order") {
  CHECK(fields::splitting_degree(2, 15) == 4);
  CHECK(fields::splitting_degree(2, 1) == 1);
  CHECK(fields::splitting_degree(2, 63) == 6);
  CHECK(fields::splitting_degree(3, 20) == 4);
  CHECK(fields::splitting_degree(2, 3) == 2);
  CHECK_THROWS_AS(fields::splitting_degree(2, 6), InputError);
  // p^m = 1 mod e and no smaller exponent works, by scan
  for (unsigned p : {2u, 3u, 5u}) {
    for (std::uint64_t e : {7ull, 9ull, 11ull, 35ull, 99ull}) {
      if (e % p == 0) continue;
      unsigned m = fields::splitting_degree(p, e);
      std::uint64_t cur = 1;
      for (unsigned k = 1; k < m; ++k) {
        cur = (cur * p) % e;
        CHECK(cur != 1);
      }
      CHECK((cur * p) % e == 1);
    }
  }
}
