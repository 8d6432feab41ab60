#include "cactus3/cactus.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cactus3 {

FactorTriple make_factor_triple(const Permutation& alpha1, const Permutation& alpha2) {
  if (alpha1.degree() != alpha2.degree()) throw std::invalid_argument("incompatible degrees");
  const int n = alpha1.degree();
  Permutation alpha3 =
      compose(alpha2.inverse(), compose(alpha1.inverse(), Permutation::long_cycle(n)));
  return FactorTriple{n, alpha1, alpha2, std::move(alpha3)};
}

PartitionedCactus make_partitioned_cactus(const Permutation& alpha1, const Permutation& alpha2,
                                          SetPartition pi1, SetPartition pi2, SetPartition pi3) {
  FactorTriple t = make_factor_triple(alpha1, alpha2);
  PartitionedCactus pc{t.n, t.alpha1, t.alpha2, t.alpha3,
                       std::move(pi1), std::move(pi2), std::move(pi3)};
  if (auto v = validate(pc)) throw std::invalid_argument("invalid partitioned cactus: " + v->message);
  return pc;
}

std::optional<StabilityViolation> validate(const PartitionedCactus& pc) {
  const Permutation* alphas[3] = {&pc.alpha1, &pc.alpha2, &pc.alpha3};
  const SetPartition* pis[3] = {&pc.pi1, &pc.pi2, &pc.pi3};
  for (int t = 0; t < 3; ++t) {
    if (pis[t]->n() != pc.n)
      return StabilityViolation{t + 1, -1, {},
                                "partition ground set differs from cactus size"};
    for (const auto& cyc : alphas[t]->cycles()) {
      int blk = pis[t]->block_of(cyc.front());
      for (int x : cyc) {
        if (pis[t]->block_of(x) != blk) {
          std::ostringstream msg;
          msg << "cycle (";
          for (size_t u = 0; u < cyc.size(); ++u) msg << (u ? " " : "") << cyc[u];
          msg << ") of alpha" << t + 1 << " straddles blocks of pi" << t + 1;
          return StabilityViolation{t + 1, blk, cyc, msg.str()};
        }
      }
    }
  }
  return std::nullopt;
}

IndexedBlocks bijection_blocks(const PartitionedCactus& pc) {
  IndexedBlocks ib;
  // Canonical order puts the block containing 1 first; the bijection wants
  // it last (index p1).
  const auto& w = pc.pi1.blocks();
  for (size_t i = 1; i < w.size(); ++i) ib.w.push_back(w[i]);
  ib.w.push_back(w[0]);
  ib.b = pc.pi2.blocks();
  ib.g = pc.pi3.blocks();
  return ib;
}

TraversalLabels traversal_labels(const PartitionedCactus& pc, int i) {
  if (i < 1 || i > pc.n) throw std::out_of_range("triangle index out of range");
  Permutation a3i = pc.alpha3.inverse();
  return TraversalLabels{i, a3i(pc.alpha2.inverse()(i)), a3i(i)};
}

MarkerSet markers(const PartitionedCactus& pc) {
  IndexedBlocks ib = bijection_blocks(pc);
  Permutation a3i = pc.alpha3.inverse();
  MarkerSet ms;
  for (const auto& blk : ib.w) {
    ms.m1.push_back(*std::max_element(blk.begin(), blk.end()));
    ms.white_last.push_back(ms.m1.back());
  }
  for (const auto& blk : ib.b) {
    int m = 0;
    for (int x : blk) m = std::max(m, a3i(x));
    ms.m2p.push_back(m);
    ms.black_last.push_back(pc.alpha2(pc.alpha3(m)));
  }
  for (const auto& blk : ib.g) {
    ms.m3.push_back(*std::max_element(blk.begin(), blk.end()));
    ms.grey_last.push_back(pc.alpha3(ms.m3.back()));
  }
  return ms;
}

int genus(const FactorTriple& t) {
  int cycles = t.alpha1.cycle_count() + t.alpha2.cycle_count() + t.alpha3.cycle_count();
  int num = 2 * t.n + 1 - cycles;
  if (num < 0 || num % 2 != 0)
    throw std::logic_error("non-integral or negative genus: product invariant broken");
  return num / 2;
}

namespace {

long factorial_long(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Lexicographic unranking via the factorial number system.
std::vector<int> unrank_permutation(int n, long rank) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> img;
  img.reserve(n);
  long f = factorial_long(n);
  for (int i = n; i >= 1; --i) {
    f /= i;
    long d = rank / f;
    rank %= f;
    img.push_back(pool[d]);
    pool.erase(pool.begin() + d);
  }
  return img;
}

}  // namespace

void enumerate_factorizations_range(int n, long a1_begin, long a1_end,
                                    const std::function<void(const FactorTriple&)>& yield) {
  if (n == 0) return;
  const Permutation gamma = Permutation::long_cycle(n);
  std::vector<int> img1 = unrank_permutation(n, a1_begin);
  for (long r = a1_begin; r < a1_end; ++r) {
    Permutation a1(img1);
    Permutation a1_inv_gamma = compose(a1.inverse(), gamma);
    std::vector<int> img2(n);
    for (int i = 0; i < n; ++i) img2[i] = i + 1;
    do {
      Permutation a2(img2);
      FactorTriple t{n, a1, a2, compose(a2.inverse(), a1_inv_gamma)};
      yield(t);
    } while (std::next_permutation(img2.begin(), img2.end()));
    std::next_permutation(img1.begin(), img1.end());
  }
}

void enumerate_factorizations(int n, const std::function<void(const FactorTriple&)>& yield,
                              int limit) {
  if (n > limit)
    throw LimitExceeded("enumeration size " + std::to_string(n) + " exceeds limit " +
                        std::to_string(limit) +
                        "; raise the limit (--force / CACTUS3_MAX_N) and consider --jobs");
  if (n == 0) return;
  enumerate_factorizations_range(n, 0, factorial_long(n), yield);
}

namespace {

SetPartition blocks_from_rgs(int n, const std::vector<std::vector<int>>& cycles,
                             const std::vector<int>& rgs, int p) {
  std::vector<std::vector<int>> blocks(p);
  for (size_t c = 0; c < cycles.size(); ++c)
    blocks[rgs[c]].insert(blocks[rgs[c]].end(), cycles[c].begin(), cycles[c].end());
  return SetPartition(n, std::move(blocks));
}

}  // namespace

void enumerate_cc(int p1, int p2, int p3, int n,
                  const std::function<void(const PartitionedCactus&)>& yield, int limit) {
  if (p1 < 1 || p2 < 1 || p3 < 1) throw std::invalid_argument("block counts must be >= 1");
  enumerate_factorizations(
      n,
      [&](const FactorTriple& t) {
        auto c1 = t.alpha1.cycles(), c2 = t.alpha2.cycles(), c3 = t.alpha3.cycles();
        auto r1 = rgs_partitions(static_cast<int>(c1.size()), p1);
        if (r1.empty()) return;
        auto r2 = rgs_partitions(static_cast<int>(c2.size()), p2);
        if (r2.empty()) return;
        auto r3 = rgs_partitions(static_cast<int>(c3.size()), p3);
        if (r3.empty()) return;
        for (const auto& a : r1)
          for (const auto& b : r2)
            for (const auto& c : r3)
              yield(PartitionedCactus{n, t.alpha1, t.alpha2, t.alpha3,
                                      blocks_from_rgs(n, c1, a, p1),
                                      blocks_from_rgs(n, c2, b, p2),
                                      blocks_from_rgs(n, c3, c, p3)});
      },
      limit);
}

void enumerate_cc_all(int n, const std::function<void(const PartitionedCactus&)>& yield,
                      int limit) {
  enumerate_factorizations(
      n,
      [&](const FactorTriple& t) {
        auto c1 = t.alpha1.cycles(), c2 = t.alpha2.cycles(), c3 = t.alpha3.cycles();
        int n1 = static_cast<int>(c1.size());
        int n2 = static_cast<int>(c2.size());
        int n3 = static_cast<int>(c3.size());
        for (int p1 = 1; p1 <= n1; ++p1) {
          auto r1 = rgs_partitions(n1, p1);
          for (int p2 = 1; p2 <= n2; ++p2) {
            auto r2 = rgs_partitions(n2, p2);
            for (int p3 = 1; p3 <= n3; ++p3) {
              auto r3 = rgs_partitions(n3, p3);
              for (const auto& a : r1)
                for (const auto& b : r2)
                  for (const auto& c : r3)
                    yield(PartitionedCactus{n, t.alpha1, t.alpha2, t.alpha3,
                                            blocks_from_rgs(n, c1, a, p1),
                                            blocks_from_rgs(n, c2, b, p2),
                                            blocks_from_rgs(n, c3, c, p3)});
            }
          }
        }
      },
      limit);
}

std::string export_dot(const FactorTriple& t) {
  std::ostringstream out;
  out << "graph cactus {\n";
  for (int i = 1; i <= t.n; ++i)
    out << "  t" << i << " [shape=triangle, label=\"" << i << "\"];\n";
  const char* color_name[3] = {"white", "black", "grey"};
  const char* prefix[3] = {"w", "b", "g"};
  const Permutation* alphas[3] = {&t.alpha1, &t.alpha2, &t.alpha3};
  for (int c = 0; c < 3; ++c) {
    auto cycles = alphas[c]->cycles();
    for (size_t v = 0; v < cycles.size(); ++v) {
      out << "  " << prefix[c] << v + 1 << " [shape=circle, style=filled, fillcolor="
          << color_name[c] << ", label=\"" << prefix[c] << v + 1 << "\"];\n";
    }
    for (size_t v = 0; v < cycles.size(); ++v)
      for (int i : cycles[v]) out << "  t" << i << " -- " << prefix[c] << v + 1 << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cactus3
