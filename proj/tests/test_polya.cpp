#include "sqbetti/polya.hpp"

#include "oracles.hpp"

#include <doctest.h>

using sqbetti::BigInt;
using sqbetti::braceletCount;

TEST_CASE("totient and binomial") {
  CHECK(sqbetti::totient(1) == 1);
  CHECK(sqbetti::totient(12) == 4);
  CHECK(sqbetti::totient(97) == 96);
  CHECK_THROWS_AS(sqbetti::totient(0), std::invalid_argument);
  CHECK(sqbetti::binomial(10, 3) == 120);
  CHECK(sqbetti::binomial(3, 5) == 0);
}

TEST_CASE("cycle-index count equals brute-force dihedral orbits for d <= 14") {
  for (unsigned d = 1; d <= 14; ++d) {
    for (unsigned i = 0; i <= d; ++i) {
      CAPTURE(d);
      CAPTURE(i);
      CHECK(braceletCount({d, i}) == oracle::orbitCount(d, i, true));
    }
  }
}

TEST_CASE("bracelets and necklaces first differ at six beads") {
  CHECK(oracle::orbitCount(6, 3, false) == 4);
  CHECK(braceletCount({6, 3}) == 3);
  for (unsigned d = 1; d <= 5; ++d) {
    for (unsigned i = 0; i <= d; ++i) CHECK(braceletCount({d, i}) == oracle::orbitCount(d, i, false));
  }
}

TEST_CASE("complement symmetry N(d,i) = N(d,d-i) for d <= 60") {
  for (unsigned d = 1; d <= 60; ++d) {
    for (unsigned i = 0; i <= d; ++i) CHECK(braceletCount({d, i}) == braceletCount({d, d - i}));
  }
}

TEST_CASE("row sums equal the bracelet total") {
  for (unsigned d = 1; d <= 60; ++d) {
    BigInt sum = 0;
    for (unsigned i = 0; i <= d; ++i) sum += braceletCount({d, i});
    CHECK(sum == sqbetti::braceletTotal(d));
  }
  // Known totals of binary bracelets.
  CHECK(sqbetti::braceletTotal(1) == 2);
  CHECK(sqbetti::braceletTotal(6) == 13);
  CHECK(sqbetti::braceletTotal(10) == 78);
}

TEST_CASE("bracelet errors and small rows") {
  CHECK_THROWS_AS(braceletCount({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(braceletCount({3, 4}), std::invalid_argument);
  CHECK(braceletCount({4, 2}) == 2);
  CHECK(braceletCount({5, 2}) == 2);
  CHECK(sqbetti::braceletGeneratingPolynomial(2) == sqbetti::IntPolynomial{1, 0, 1, 0, 1});
}
