#include "cactus3/set_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace cactus3 {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<char> seen(n, 0);
  int covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n || seen[x - 1]) throw std::invalid_argument("blocks do not partition {1..n}");
      seen[x - 1] = 1;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("blocks do not cover {1..n}");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

int SetPartition::block_of(int x) const {
  for (int i = 0; i < block_count(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x)) return i;
  throw std::out_of_range("element not in ground set");
}

std::vector<std::vector<int>> rgs_partitions(int m, int p) {
  std::vector<std::vector<int>> out;
  if (p < 1 || p > m) return out;
  std::vector<int> a(m, 0);
  // a[0] = 0 always; a[i] <= max(a[0..i-1]) + 1, and the final class count
  // must be exactly p.
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (m - i < p - used) return;  // cannot still reach p classes
    if (i == m) {
      if (used == p) out.push_back(a);
      return;
    }
    int top = std::min(used, p - 1);
    for (int c = 0; c <= top; ++c) {
      a[i] = c;
      self(self, i + 1, std::max(used, c + 1));
    }
  };
  if (m > 0) rec(rec, 1, 1);
  else if (p == 0) out.push_back({});
  return out;
}

}  // namespace cactus3
