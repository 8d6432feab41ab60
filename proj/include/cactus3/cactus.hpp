#pragma once

#include "cactus3/permutation.hpp"
#include "cactus3/set_partition.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cactus3 {

inline constexpr int kDefaultEnumerationLimit = 7;

// Raised when an enumeration size exceeds the configured limit.
class LimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// (alpha1, alpha2, alpha3) with alpha1 alpha2 alpha3 = gamma_n.
struct FactorTriple {
  int n = 0;
  Permutation alpha1, alpha2, alpha3;

  bool operator==(const FactorTriple& o) const {
    return n == o.n && alpha1 == o.alpha1 && alpha2 == o.alpha2 && alpha3 == o.alpha3;
  }
};

// alpha3 is derived: alpha2^-1 alpha1^-1 gamma_n.
FactorTriple make_factor_triple(const Permutation& alpha1, const Permutation& alpha2);

// (pi1, pi2, pi3, alpha1, alpha2); each block of pi_i is a union of cycles
// of alpha_i. Partitions are stored canonically (unordered blocks); the
// bijection's block indexing (1 in the last white block) is rebuilt on use.
struct PartitionedCactus {
  int n = 0;
  Permutation alpha1, alpha2, alpha3;
  SetPartition pi1, pi2, pi3;

  bool operator==(const PartitionedCactus& o) const {
    return n == o.n && alpha1 == o.alpha1 && alpha2 == o.alpha2 && pi1 == o.pi1 &&
           pi2 == o.pi2 && pi3 == o.pi3;
  }
};

PartitionedCactus make_partitioned_cactus(const Permutation& alpha1, const Permutation& alpha2,
                                          SetPartition pi1, SetPartition pi2, SetPartition pi3);

struct StabilityViolation {
  int partition_index = 0;     // 1, 2 or 3
  int block_index = 0;         // 0-based into canonical block order
  std::vector<int> cycle;      // cycle straddling the block
  std::string message;
};

// Checks the union-of-cycles invariants and block counts; nullopt when ok.
std::optional<StabilityViolation> validate(const PartitionedCactus& pc);

// Blocks of pc in the indexing used by the bijection: pi1 with the block
// containing 1 moved last, pi2/pi3 in canonical order.
struct IndexedBlocks {
  std::vector<std::vector<int>> w, b, g;
};
IndexedBlocks bijection_blocks(const PartitionedCactus& pc);

// (white, black, grey) traversal labels of triangle i:
// (i, alpha3^-1 alpha2^-1(i), alpha3^-1(i)).
struct TraversalLabels {
  int white, black, grey;
};
TraversalLabels traversal_labels(const PartitionedCactus& pc, int i);

// Last-passage data per block, in the order of bijection_blocks.
struct MarkerSet {
  std::vector<int> m1;           // max of white block i
  std::vector<int> m2p;          // max of alpha3^-1(black block j)
  std::vector<int> m3;           // max of grey block k
  std::vector<int> white_last;   // triangle of white block i's last passage = m1[i]
  std::vector<int> black_last;   // = alpha2 alpha3 (m2p[j])
  std::vector<int> grey_last;    // = alpha3 (m3[k])
};
MarkerSet markers(const PartitionedCactus& pc);

// Euler-characteristic genus: (2n + 1 - n1 - n2 - n3) / 2.
int genus(const FactorTriple& t);

// All n!^2 factor triples in lexicographic (alpha1, alpha2) order.
// alpha1 ranks [a1_begin, a1_end) select a contiguous sub-range for
// parallel consumption; the full range is [0, n!).
void enumerate_factorizations(int n, const std::function<void(const FactorTriple&)>& yield,
                              int limit = kDefaultEnumerationLimit);
void enumerate_factorizations_range(int n, long a1_begin, long a1_end,
                                    const std::function<void(const FactorTriple&)>& yield);

// All partitioned cacti over all factorizations of gamma_n with the given
// block counts.
void enumerate_cc(int p1, int p2, int p3, int n,
                  const std::function<void(const PartitionedCactus&)>& yield,
                  int limit = kDefaultEnumerationLimit);

// All partitioned cacti of every block-count profile (one pass over the
// factorizations; partition counts can be bucketed by the caller).
void enumerate_cc_all(int n, const std::function<void(const PartitionedCactus&)>& yield,
                      int limit = kDefaultEnumerationLimit);

// DOT text of the constellation incidence structure: one node per triangle,
// one node per cycle of each alpha_i, an edge when the triangle belongs to
// the cycle.
std::string export_dot(const FactorTriple& t);

}  // namespace cactus3
