#pragma once

#include <vector>

namespace cactus3 {

// Partition of {1..n} into nonempty blocks. Canonical storage: elements
// ascending within a block, blocks sorted by minimum element.
class SetPartition {
public:
  SetPartition() = default;
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  // Index (0-based) of the block containing x.
  int block_of(int x) const;

  bool operator==(const SetPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
  bool operator!=(const SetPartition& o) const { return !(*this == o); }

private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// All partitions of the index set {0..m-1} into exactly p unordered blocks,
// as restricted-growth strings a[0..m-1] (a[i] = class of item i).
// Deterministic lexicographic order of the growth strings.
std::vector<std::vector<int>> rgs_partitions(int m, int p);

}  // namespace cactus3
