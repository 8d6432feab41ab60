#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cactus3/cactus.hpp"
#include "cactus3/counting.hpp"
#include "cactus3/numbers.hpp"

#include <set>

using namespace cactus3;

namespace {

// The running example over {1..5}: alpha1 = (1)(24)(3)(5), alpha2 =
// (1)(23)(45), with partitions pi1 = {245|13}, pi2 = {123|45},
// pi3 = {3|1245}.
PartitionedCactus pc1() {
  Permutation a1 = Permutation::from_cycles(5, {{2, 4}});
  Permutation a2 = Permutation::from_cycles(5, {{2, 3}, {4, 5}});
  return make_partitioned_cactus(a1, a2, SetPartition(5, {{2, 4, 5}, {1, 3}}),
                                 SetPartition(5, {{1, 2, 3}, {4, 5}}),
                                 SetPartition(5, {{3}, {1, 2, 4, 5}}));
}

}  // namespace

TEST_CASE("make_factor_triple derives the third factor") {
  auto forced = make_factor_triple(Permutation::identity(2), Permutation::identity(2));
  CHECK(forced.alpha3 == Permutation::long_cycle(2));

  auto ex1 = make_factor_triple(Permutation::from_cycles(5, {{2, 4}}),
                                Permutation::from_cycles(5, {{2, 3}, {4, 5}}));
  CHECK(ex1.alpha3 == Permutation::from_cycles(5, {{1, 5}}));

  auto ex2 = make_factor_triple(Permutation::from_cycles(2, {{1, 2}}),
                                Permutation::from_cycles(2, {{1, 2}}));
  CHECK(ex2.alpha3 == Permutation::from_cycles(2, {{1, 2}}));

  CHECK_THROWS(make_factor_triple(Permutation::identity(2), Permutation::identity(3)));
}

TEST_CASE("validate accepts pc1 and rejects straddling cycles") {
  CHECK(!validate(pc1()));

  Permutation a1 = Permutation::from_cycles(5, {{2, 4}});
  Permutation a2 = Permutation::from_cycles(5, {{2, 3}, {4, 5}});
  // {2} vs cycle (2 4): the cycle straddles the blocks.
  CHECK_THROWS(make_partitioned_cactus(a1, a2, SetPartition(5, {{2}, {1, 3, 4, 5}}),
                                       SetPartition(5, {{1, 2, 3}, {4, 5}}),
                                       SetPartition(5, {{3}, {1, 2, 4, 5}})));
}

TEST_CASE("traversal labels") {
  auto pc = pc1();
  CHECK(traversal_labels(pc, 5).grey == 1);
  CHECK(traversal_labels(pc, 3).black == 2);
  CHECK(traversal_labels(pc, 2).white == 2);
  CHECK_THROWS(traversal_labels(pc, 0));
  CHECK_THROWS(traversal_labels(pc, 6));
}

TEST_CASE("markers of pc1") {
  auto pc = pc1();
  auto ms = markers(pc);
  // bijection block order: pi1 = ({2,4,5}, {1,3}) with the block containing
  // 1 last; pi2, pi3 canonical ({1,2,3},{4,5}) and ({1,2,4,5},{3}).
  CHECK(ms.m1 == std::vector<int>{5, 3});
  CHECK(ms.white_last == std::vector<int>{5, 3});
  CHECK(ms.m2p == std::vector<int>{5, 4});
  CHECK(ms.black_last == std::vector<int>{1, 5});
  CHECK(ms.m3 == std::vector<int>{5, 3});
  CHECK(ms.grey_last == std::vector<int>{1, 3});
}

TEST_CASE("genus of the three reference cacti") {
  auto g0 = make_factor_triple(Permutation::from_cycles(5, {{2, 4}}),
                               Permutation::from_cycles(5, {{2, 3}, {4, 5}}));
  CHECK(genus(g0) == 0);
  auto g1a = make_factor_triple(Permutation::from_cycles(2, {{1, 2}}),
                                Permutation::from_cycles(2, {{1, 2}}));
  CHECK(genus(g1a) == 1);
  auto g1b = make_factor_triple(Permutation::from_cycles(4, {{1, 3}}),
                                Permutation::from_cycles(4, {{1, 4}, {2, 3}}));
  CHECK(g1b.alpha3 == Permutation::from_cycles(4, {{1, 3}, {2, 4}}));
  CHECK(genus(g1b) == 1);
}

TEST_CASE("enumerate_factorizations yields n!^2 valid triples") {
  for (int n = 1; n <= 4; ++n) {
    long count = 0;
    enumerate_factorizations(n, [&](const FactorTriple& t) {
      ++count;
      CHECK(compose(t.alpha1, compose(t.alpha2, t.alpha3)) == Permutation::long_cycle(n));
    });
    CHECK(count == factorial(n) * factorial(n));
  }
}

TEST_CASE("enumeration limit raises") {
  CHECK_THROWS_AS(enumerate_factorizations(8, [](const FactorTriple&) {}), LimitExceeded);
}

TEST_CASE("range splitting partitions the stream") {
  std::vector<FactorTriple> full, split;
  enumerate_factorizations(3, [&](const FactorTriple& t) { full.push_back(t); });
  for (long b = 0; b < 6; b += 2)
    enumerate_factorizations_range(3, b, b + 2, [&](const FactorTriple& t) {
      split.push_back(t);
    });
  REQUIRE(full.size() == split.size());
  for (size_t i = 0; i < full.size(); ++i) CHECK(full[i] == split[i]);
}

TEST_CASE("enumerate_cc basics") {
  long count = 0;
  enumerate_cc(1, 1, 1, 2, [&](const PartitionedCactus& pc) {
    ++count;
    CHECK(!validate(pc));
  });
  CHECK(count == 4);

  bool found = false;
  auto target = pc1();
  enumerate_cc(2, 2, 2, 5, [&](const PartitionedCactus& pc) {
    if (pc == target) found = true;
  });
  CHECK(found);

  long none = 0;
  enumerate_cc(3, 1, 1, 2, [&](const PartitionedCactus&) { ++none; });
  CHECK(none == 0);
}

TEST_CASE("genus parity holds exhaustively for small n") {
  for (int n = 1; n <= 4; ++n)
    enumerate_factorizations(n, [&](const FactorTriple& t) {
      int total = t.alpha1.cycle_count() + t.alpha2.cycle_count() + t.alpha3.cycle_count();
      CHECK((2 * n + 1 - total) % 2 == 0);
      CHECK(genus(t) >= 0);
    });
}

TEST_CASE("export_dot node and edge counts") {
  auto t1 = make_factor_triple(Permutation::identity(1), Permutation::identity(1));
  std::string d1 = export_dot(t1);
  CHECK(d1.find("t1") != std::string::npos);

  auto ex1 = make_factor_triple(Permutation::from_cycles(5, {{2, 4}}),
                                Permutation::from_cycles(5, {{2, 3}, {4, 5}}));
  std::string d = export_dot(ex1);
  size_t edges = 0;
  for (size_t pos = d.find(" -- "); pos != std::string::npos; pos = d.find(" -- ", pos + 1))
    ++edges;
  CHECK(edges == 15);  // 3 incidences per triangle

  auto mid = make_factor_triple(Permutation::from_cycles(2, {{1, 2}}),
                                Permutation::from_cycles(2, {{1, 2}}));
  std::string dm = export_dot(mid);
  size_t em = 0;
  for (size_t pos = dm.find(" -- "); pos != std::string::npos; pos = dm.find(" -- ", pos + 1))
    ++em;
  CHECK(em == 6);
}

TEST_CASE("bijection_blocks puts the block containing 1 last in pi1") {
  auto ib = bijection_blocks(pc1());
  CHECK(ib.w == std::vector<std::vector<int>>{{2, 4, 5}, {1, 3}});
  CHECK(ib.b == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}});
  CHECK(ib.g == std::vector<std::vector<int>>{{1, 2, 4, 5}, {3}});
}
