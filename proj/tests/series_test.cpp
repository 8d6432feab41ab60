#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cactus3/series.hpp"

using namespace cactus3;

namespace {

TruncatedSeries one_var(int cap) { return TruncatedSeries(1, {cap}); }

}  // namespace

TEST_CASE("reciprocal of 1 - x is the geometric series") {
  auto one = TruncatedSeries::constant(1, {6}, 1);
  auto x = TruncatedSeries::variable(1, {6}, 0);
  auto r = (one - x).reciprocal();
  for (int k = 0; k <= 6; ++k) CHECK(r.coeff({k}) == 1);
}

TEST_CASE("(1+x)(1-x) = 1 - x^2") {
  auto one = TruncatedSeries::constant(1, {4}, 1);
  auto x = TruncatedSeries::variable(1, {4}, 0);
  auto prod = (one + x) * (one - x);
  CHECK(prod.coeff({0}) == 1);
  CHECK(prod.coeff({1}) == 0);
  CHECK(prod.coeff({2}) == -1);
  CHECK(prod.coeff({3}) == 0);
}

TEST_CASE("series times its reciprocal is 1") {
  auto s = one_var(4);
  s.set_coeff({0}, 1);
  s.set_coeff({1}, 2);
  s.set_coeff({2}, 3);
  auto prod = s * s.reciprocal();
  CHECK(prod.coeff({0}) == 1);
  for (int k = 1; k <= 4; ++k) CHECK(prod.coeff({k}) == 0);
}

TEST_CASE("reciprocal requires a nonzero constant term") {
  auto x = TruncatedSeries::variable(1, {4}, 0);
  CHECK_THROWS(x.reciprocal());
}

TEST_CASE("incompatible caps are rejected") {
  auto a = TruncatedSeries::constant(1, {3}, 1);
  auto b = TruncatedSeries::constant(1, {4}, 1);
  CHECK_THROWS(a + b);
}

TEST_CASE("group caps bound the joint degree") {
  std::vector<TruncatedSeries::GroupCap> gc{{{0, 1}, 2}};
  auto x = TruncatedSeries::variable(2, {2, 2}, 0, gc);
  auto y = TruncatedSeries::variable(2, {2, 2}, 1, gc);
  auto prod = x * x * y;  // joint degree 3 exceeds the group cap
  CHECK(prod.is_zero());
}

TEST_CASE("falling factorial and binomial polynomials") {
  auto ff1 = falling_factorial_poly(1, {4}, 0, 1);
  CHECK(ff1.coeff({1}) == 1);
  CHECK(ff1.coeff({0}) == 0);
  auto b2 = binomial_poly(1, {4}, 0, 2);  // (x^2 - x)/2
  CHECK(b2.coeff({2}) == mpq_class(1, 2));
  CHECK(b2.coeff({1}) == mpq_class(-1, 2));
  CHECK(b2.coeff({0}) == 0);
}

TEST_CASE("Stirling expansion of powers in the falling-factorial basis") {
  for (int a = 0; a <= 6; ++a) CHECK(binomial_poly_eval_check(a));
  CHECK_THROWS(binomial_poly_eval_check(13));
}
