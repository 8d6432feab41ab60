#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cactus3/io_json.hpp"

using namespace cactus3;
using nlohmann::json;

namespace {

PartitionedCactus pc1() {
  Permutation a1 = Permutation::from_cycles(5, {{2, 4}});
  Permutation a2 = Permutation::from_cycles(5, {{2, 3}, {4, 5}});
  return make_partitioned_cactus(a1, a2, SetPartition(5, {{2, 4, 5}, {1, 3}}),
                                 SetPartition(5, {{1, 2, 3}, {4, 5}}),
                                 SetPartition(5, {{3}, {1, 2, 4, 5}}));
}

}  // namespace

TEST_CASE("partitioned cactus round trip") {
  auto pc = pc1();
  json j = pc_to_json(pc);
  CHECK(j["n"] == 5);
  CHECK(j["alpha1"] == json({1, 4, 3, 2, 5}));
  CHECK(j["pi1"] == json({{1, 3}, {2, 4, 5}}));
  CHECK(pc_from_json(j) == pc);
}

TEST_CASE("partitioned cactus parse errors name the field") {
  json j = pc_to_json(pc1());
  json missing = j;
  missing.erase("alpha2");
  CHECK_THROWS_WITH_AS(pc_from_json(missing), doctest::Contains("alpha2"),
                       std::invalid_argument);
  json bad = j;
  bad["alpha1"] = {1, 1, 3, 4, 5};
  CHECK_THROWS_WITH_AS(pc_from_json(bad), doctest::Contains("alpha1"), std::invalid_argument);
  json straddle = j;
  straddle["pi1"] = {{2}, {1, 3, 4, 5}};
  CHECK_THROWS_AS(pc_from_json(straddle), std::invalid_argument);
}

TEST_CASE("tree round trip") {
  CactusTree t{Color::White, false,
               {{Color::Black, true, {{Color::Grey, false, {}}}},
                {Color::Black, false, {}}}};
  json j = tree_to_json(t);
  CHECK(j["color"] == "white");
  CHECK(j["children"][0]["flag"] == true);
  CHECK(tree_from_json(j) == t);
  json bad = j;
  bad["color"] = "red";
  CHECK_THROWS_WITH_AS(tree_from_json(bad), doctest::Contains("color"),
                       std::invalid_argument);
}

TEST_CASE("image tuple round trip") {
  ImageTuple tup = theta_forward(pc1());
  json j = tuple_to_json(tup);
  CHECK(j["n"] == 5);
  CHECK(j["p"] == json({2, 2, 2}));
  CHECK(j["s0"] == json({3, 4}));
  CHECK(j["chi"] == json({5}));
  ImageTuple back = tuple_from_json(j);
  CHECK(back == tup);
}

TEST_CASE("image tuple parse validates invariants") {
  json j = tuple_to_json(theta_forward(pc1()));
  json bad = j;
  bad["s1"] = {1, 2, 3};  // drops the forced element n
  CHECK_THROWS_AS(tuple_from_json(bad), std::invalid_argument);
  json empty_sigma = j;
  // sigma arrays may be empty only when the degree works out; here it does not
  empty_sigma["sigma1"] = json::array();
  CHECK_THROWS_AS(tuple_from_json(empty_sigma), std::invalid_argument);
}

TEST_CASE("serialization is stable byte for byte") {
  auto pc = pc1();
  CHECK(pc_to_json(pc).dump(2) == pc_to_json(pc_from_json(pc_to_json(pc))).dump(2));
}
