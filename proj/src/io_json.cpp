#include "cactus3/io_json.hpp"

#include <stdexcept>
#include <string>

namespace cactus3 {

using nlohmann::json;

namespace {

json perm_to_json(const Permutation& p) { return json(p.images()); }

Permutation perm_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw std::invalid_argument("field '" + field + "' must be an array");
  std::vector<int> images;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw std::invalid_argument("field '" + field + "' must contain integers");
    images.push_back(v.get<int>());
  }
  try {
    return Permutation(std::move(images));
  } catch (const std::exception& e) {
    throw std::invalid_argument("field '" + field + "': " + e.what());
  }
}

json partition_to_json(const SetPartition& p) { return json(p.blocks()); }

SetPartition partition_from_json(const json& j, int n, const std::string& field) {
  if (!j.is_array()) throw std::invalid_argument("field '" + field + "' must be an array");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j) {
    if (!b.is_array())
      throw std::invalid_argument("field '" + field + "' must be an array of arrays");
    blocks.push_back(b.get<std::vector<int>>());
  }
  try {
    return SetPartition(n, std::move(blocks));
  } catch (const std::exception& e) {
    throw std::invalid_argument("field '" + field + "': " + e.what());
  }
}

const json& require(const json& j, const std::string& field) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  auto it = j.find(field);
  if (it == j.end()) throw std::invalid_argument("missing field '" + field + "'");
  return *it;
}

std::vector<int> int_array(const json& j, const std::string& field) {
  if (!j.is_array()) throw std::invalid_argument("field '" + field + "' must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw std::invalid_argument("field '" + field + "' must contain integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json pc_to_json(const PartitionedCactus& pc) {
  json j;
  j["n"] = pc.n;
  j["alpha1"] = perm_to_json(pc.alpha1);
  j["alpha2"] = perm_to_json(pc.alpha2);
  j["pi1"] = partition_to_json(pc.pi1);
  j["pi2"] = partition_to_json(pc.pi2);
  j["pi3"] = partition_to_json(pc.pi3);
  // Canonical block order puts the block containing 1 first.
  j["root_block_hint"] = 1;
  return j;
}

PartitionedCactus pc_from_json(const json& j) {
  const json& jn = require(j, "n");
  if (!jn.is_number_integer() || jn.get<int>() < 1)
    throw std::invalid_argument("field 'n' must be a positive integer");
  int n = jn.get<int>();
  Permutation a1 = perm_from_json(require(j, "alpha1"), "alpha1");
  Permutation a2 = perm_from_json(require(j, "alpha2"), "alpha2");
  if (a1.degree() != n) throw std::invalid_argument("field 'alpha1' has degree != n");
  if (a2.degree() != n) throw std::invalid_argument("field 'alpha2' has degree != n");
  SetPartition pi1 = partition_from_json(require(j, "pi1"), n, "pi1");
  SetPartition pi2 = partition_from_json(require(j, "pi2"), n, "pi2");
  SetPartition pi3 = partition_from_json(require(j, "pi3"), n, "pi3");
  try {
    return make_partitioned_cactus(a1, a2, std::move(pi1), std::move(pi2), std::move(pi3));
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("invalid partitioned cactus: ") + e.what());
  }
}

json tree_to_json(const CactusTree& t) {
  json j;
  j["color"] = color_name(t.color);
  j["flag"] = t.flag;
  json children = json::array();
  for (const auto& ch : t.children) children.push_back(tree_to_json(ch));
  j["children"] = std::move(children);
  return j;
}

CactusTree tree_from_json(const json& j) {
  CactusTree t;
  const json& jc = require(j, "color");
  if (!jc.is_string()) throw std::invalid_argument("field 'color' must be a string");
  std::string color = jc.get<std::string>();
  if (color == "white")
    t.color = Color::White;
  else if (color == "black")
    t.color = Color::Black;
  else if (color == "grey")
    t.color = Color::Grey;
  else
    throw std::invalid_argument("field 'color' must be white, black or grey");
  const json& jf = require(j, "flag");
  if (!jf.is_boolean()) throw std::invalid_argument("field 'flag' must be a boolean");
  t.flag = jf.get<bool>();
  const json& jch = require(j, "children");
  if (!jch.is_array()) throw std::invalid_argument("field 'children' must be an array");
  for (const auto& ch : jch) t.children.push_back(tree_from_json(ch));
  return t;
}

json tuple_to_json(const ImageTuple& tup) {
  json j;
  j["n"] = tup.n;
  j["p"] = std::vector<int>{tup.p1, tup.p2, tup.p3};
  j["tree"] = tree_to_json(tup.tree);
  j["s0"] = tup.s0;
  j["s1"] = tup.s1;
  j["s2"] = tup.s2;
  j["chi"] = tup.chi;
  j["sigma1"] = perm_to_json(tup.sigma1);
  j["sigma2"] = perm_to_json(tup.sigma2);
  return j;
}

ImageTuple tuple_from_json(const json& j) {
  ImageTuple tup;
  const json& jn = require(j, "n");
  if (!jn.is_number_integer() || jn.get<int>() < 1)
    throw std::invalid_argument("field 'n' must be a positive integer");
  tup.n = jn.get<int>();
  std::vector<int> p = int_array(require(j, "p"), "p");
  if (p.size() != 3) throw std::invalid_argument("field 'p' must have three entries");
  tup.p1 = p[0];
  tup.p2 = p[1];
  tup.p3 = p[2];
  tup.tree = tree_from_json(require(j, "tree"));
  tup.s0 = int_array(require(j, "s0"), "s0");
  tup.s1 = int_array(require(j, "s1"), "s1");
  tup.s2 = int_array(require(j, "s2"), "s2");
  tup.chi = int_array(require(j, "chi"), "chi");
  tup.sigma1 = perm_from_json(require(j, "sigma1"), "sigma1");
  tup.sigma2 = perm_from_json(require(j, "sigma2"), "sigma2");
  if (auto err = validate_tuple(tup)) throw std::invalid_argument("invalid tuple: " + *err);
  return tup;
}

}  // namespace cactus3
