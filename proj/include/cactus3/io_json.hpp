#pragma once

#include "cactus3/bijection.hpp"
#include "cactus3/cactus.hpp"
#include "cactus3/tree.hpp"

#include <json.hpp>

namespace cactus3 {

// All parsers throw std::invalid_argument naming the offending field.

nlohmann::json pc_to_json(const PartitionedCactus& pc);
PartitionedCactus pc_from_json(const nlohmann::json& j);

nlohmann::json tree_to_json(const CactusTree& t);
CactusTree tree_from_json(const nlohmann::json& j);

nlohmann::json tuple_to_json(const ImageTuple& tup);
ImageTuple tuple_from_json(const nlohmann::json& j);

}  // namespace cactus3
