#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cactus3/cactus.hpp"
#include "cactus3/counting.hpp"
#include "cactus3/numbers.hpp"

#include <algorithm>
#include <array>

using namespace cactus3;

TEST_CASE("m_bruteforce small tables") {
  MTable t2 = m_bruteforce(2);
  CHECK(t2.at(2, 2, 1) == 1);
  CHECK(t2.at(2, 1, 2) == 1);
  CHECK(t2.at(1, 2, 2) == 1);
  CHECK(t2.at(1, 1, 1) == 1);
  CHECK(t2.at(2, 2, 2) == 0);

  for (int n = 1; n <= 4; ++n) {
    MTable t = m_bruteforce(n);
    CHECK(t.at(n, n, 1) == 1);
    mpz_class total = 0;
    for (const auto& [k, v] : t.counts) total += v;
    CHECK(total == factorial(n) * factorial(n));
  }
}

TEST_CASE("m table is symmetric under permuting the coordinates") {
  for (int n = 1; n <= 4; ++n) {
    MTable t = m_bruteforce(n);
    for (const auto& [k, v] : t.counts) {
      std::array<int, 3> s = k;
      std::sort(s.begin(), s.end());
      do {
        CHECK(t.at(s[0], s[1], s[2]) == v);
      } while (std::next_permutation(s.begin(), s.end()));
    }
  }
}

TEST_CASE("parallel brute force merges deterministically") {
  MTable serial = m_bruteforce(4, 1);
  MTable parallel = m_bruteforce(4, 3);
  CHECK(serial.counts == parallel.counts);
}

TEST_CASE("csv serialization") {
  MTable t = m_bruteforce(2);
  CHECK(t.to_csv() == "n1,n2,n3,count\n1,1,1,1\n1,2,2,1\n2,1,2,1\n2,2,1,1\n");
}

TEST_CASE("i_count_formula pinned values") {
  for (int n = 1; n <= 6; ++n) CHECK(i_count_formula(1, 1, 1, n) == factorial(n) * factorial(n));
  // The (2,2,2,5) value: 1800 * 4 * 15. The a-sum has the two nonzero terms
  // C(3,1)C(3,0)C(4,3) = 12 and C(3,0)C(3,1)C(3,3) = 3.
  CHECK(i_count_formula(2, 2, 2, 5) == 108000);
  CHECK(i_count_formula(1, 1, 4, 3) == 0);
  CHECK_THROWS(i_count_formula(0, 1, 1, 3));
}

TEST_CASE("cc_count_stirling matches enumeration and the closed form") {
  CHECK(cc_count_stirling(1, 1, 1, 2) == 4);
  for (int n = 1; n <= 4; ++n) {
    MTable t = m_bruteforce(n);
    for (int p1 = 1; p1 <= n; ++p1)
      for (int p2 = 1; p2 <= n; ++p2)
        for (int p3 = 1; p3 <= n; ++p3) {
          long brute = 0;
          enumerate_cc(p1, p2, p3, n, [&](const PartitionedCactus&) { ++brute; });
          mpz_class stirling = cc_count_stirling(p1, p2, p3, n, &t);
          CHECK(stirling == brute);
          CHECK(stirling == i_count_formula(p1, p2, p3, n));
        }
  }
}

TEST_CASE("jackson_symmetric equals the closed form and is symmetric") {
  for (int n = 1; n <= 8; ++n)
    for (int p1 = 1; p1 <= n; ++p1)
      for (int p2 = 1; p2 <= n; ++p2)
        for (int p3 = 1; p3 <= n; ++p3) {
          mpz_class j = jackson_symmetric(p1, p2, p3, n);
          CHECK(j == i_count_formula(p1, p2, p3, n));
          CHECK(j == jackson_symmetric(p3, p1, p2, n));
          CHECK(j == jackson_symmetric(p2, p1, p3, n));
        }
  for (int n = 1; n <= 6; ++n) CHECK(jackson_symmetric(1, 1, 1, n) == factorial(n) * factorial(n));
}

TEST_CASE("theorem1_check small sizes") {
  for (int n = 1; n <= 4; ++n) {
    auto report = theorem1_check(n);
    CHECK(report.pass);
    CHECK(report.n == n);
  }
}

TEST_CASE("limit enforcement") {
  CHECK_THROWS_AS(m_bruteforce(8), LimitExceeded);
  CHECK_THROWS_AS(theorem1_check(8), LimitExceeded);
}
