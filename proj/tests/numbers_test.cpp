#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cactus3/numbers.hpp"

using namespace cactus3;

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == mpz_class("2432902008176640000"));
}

TEST_CASE("binomial with out-of-range zeros") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-2, 0) == 0);  // negative upper index is out of the domain used here
}

TEST_CASE("stirling2") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 0) == 0);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 5) == 1);
  for (int a = 1; a <= 8; ++a) CHECK(stirling2(a, 1) == 1);
  // row sums are Bell numbers
  mpz_class bell = 0;
  for (int b = 0; b <= 5; ++b) bell += stirling2(5, b);
  CHECK(bell == 52);
}

TEST_CASE("multinomial with implicit remainder") {
  CHECK(multinomial(4, {1, 1}) == 12);
  CHECK(multinomial(7, {7}) == 1);
  CHECK(multinomial(3, {2, 2}) == 0);
  CHECK(multinomial(3, {-1, 2}) == 0);
  CHECK(multinomial(6, {2, 2, 2}) == 90);
  CHECK(multinomial(5, {}) == 1);
}

TEST_CASE("multinomial invariant under permuting parts") {
  CHECK(multinomial(9, {2, 3, 1}) == multinomial(9, {3, 1, 2}));
  CHECK(multinomial(9, {2, 3, 1}) == multinomial(9, {1, 2, 3}));
}
