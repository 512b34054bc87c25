#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "gf3field/gf.hpp"

using gf3::El;
using gf3::Field;

TEST_CASE("GF(3) basics") {
  const Field& F = Field::gf3();
  CHECK(F.q() == 3);
  CHECK(F.add(1, 2) == 0);
  CHECK(F.mul(2, 2) == 1);
  CHECK(F.neg(1) == 2);
  CHECK(F.inv(2) == 2);
  // The twist map on GF(3) is t -> t^3 = t.
  for (El x = 0; x < 3; ++x) CHECK(F.twist(x) == x);
  CHECK(F.generator() == 2);
}

TEST_CASE("GF(27) field axioms, exhaustive") {
  const Field& F = Field::gf27();
  const unsigned q = F.q();
  REQUIRE(q == 27);
  for (unsigned a = 0; a < q; ++a) {
    CHECK(F.add(static_cast<El>(a), 0) == a);
    CHECK(F.mul(static_cast<El>(a), 1) == a);
    CHECK(F.add(static_cast<El>(a), F.neg(static_cast<El>(a))) == 0);
    if (a != 0) CHECK(F.mul(static_cast<El>(a), F.inv(static_cast<El>(a))) == 1);
    for (unsigned b = 0; b < q; ++b) {
      CHECK(F.add(static_cast<El>(a), static_cast<El>(b)) ==
            F.add(static_cast<El>(b), static_cast<El>(a)));
      CHECK(F.mul(static_cast<El>(a), static_cast<El>(b)) ==
            F.mul(static_cast<El>(b), static_cast<El>(a)));
      for (unsigned c = 0; c < q; ++c) {
        const El A = static_cast<El>(a), B = static_cast<El>(b), C = static_cast<El>(c);
        CHECK(F.add(F.add(A, B), C) == F.add(A, F.add(B, C)));
        CHECK(F.mul(F.mul(A, B), C) == F.mul(A, F.mul(B, C)));
        CHECK(F.mul(A, F.add(B, C)) == F.add(F.mul(A, B), F.mul(A, C)));
      }
    }
  }
  CHECK_THROWS_AS((void)F.inv(0), std::domain_error);
}

TEST_CASE("GF(27) modulus is x^3 - x + 1") {
  const Field& F = Field::gf27();
  // x is the element with coefficient vector (0, 1, 0).
  const El x = F.from_coeffs({0, 1, 0});
  CHECK(x == 3);  // little-endian base-3 packing
  // x^3 = x - 1 = x + 2.
  const El x3 = F.mul(F.mul(x, x), x);
  CHECK(x3 == F.add(x, F.from_coeffs({2, 0, 0})));
}

TEST_CASE("GF(27) generator and Frobenius") {
  const Field& F = Field::gf27();
  const El g = F.generator();
  std::set<El> powers;
  El acc = 1;
  for (int i = 0; i < 26; ++i) {
    powers.insert(acc);
    acc = F.mul(acc, g);
  }
  CHECK(acc == 1);            // g^26 = 1
  CHECK(powers.size() == 26);  // all nonzero elements
  for (unsigned a = 0; a < 27; ++a) {
    const El A = static_cast<El>(a);
    CHECK(F.frobenius(A) == F.mul(F.mul(A, A), A));
    for (unsigned b = 0; b < 27; ++b) {
      const El B = static_cast<El>(b);
      // Frobenius is additive in characteristic 3.
      CHECK(F.frobenius(F.add(A, B)) == F.add(F.frobenius(A), F.frobenius(B)));
    }
  }
}

TEST_CASE("GF(27) twist squares to Frobenius") {
  // theta: t -> t^9, so theta(theta(t)) = t^81 = t^3.
  const Field& F = Field::gf27();
  for (unsigned a = 0; a < 27; ++a) {
    const El A = static_cast<El>(a);
    CHECK(F.twist(A) == F.pow(A, 9));
    CHECK(F.twist(F.twist(A)) == F.frobenius(A));
  }
}

TEST_CASE("coefficient round trip") {
  const Field& F = Field::gf27();
  for (unsigned a = 0; a < 27; ++a) {
    CHECK(F.from_coeffs(F.coeffs(static_cast<El>(a))) == a);
  }
}

TEST_CASE("make(2) yields GF(243) with consistent arithmetic") {
  Field F = Field::make(2);
  CHECK(F.q() == 243);
  const El g = F.generator();
  // Spot-check the generator order divides q - 1 and no proper divisor works.
  El acc = 1;
  int ord = 0;
  do {
    acc = F.mul(acc, g);
    ++ord;
  } while (acc != 1);
  CHECK(ord == 242);
}
