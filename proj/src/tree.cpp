#include "cactus3/tree.hpp"

#include "cactus3/cactus.hpp"
#include "cactus3/numbers.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace cactus3 {

Color next_color(Color c) {
  switch (c) {
    case Color::White: return Color::Black;
    case Color::Black: return Color::Grey;
    case Color::Grey: return Color::White;
  }
  throw std::logic_error("bad color");
}

const char* color_name(Color c) {
  switch (c) {
    case Color::White: return "white";
    case Color::Black: return "black";
    case Color::Grey: return "grey";
  }
  throw std::logic_error("bad color");
}

std::string TreeProfile::to_string() const {
  std::ostringstream s;
  s << "(" << p1 << "," << p2 << "," << p3 << "," << a << "," << b << "," << c << ")";
  return s.str();
}

namespace {

std::optional<std::string> validate_rec(const CactusTree& v, bool is_root, Color expected,
                                        std::string path) {
  if (v.color != expected)
    return path + ": expected " + color_name(expected) + " vertex, found " + color_name(v.color);
  if (v.flag && is_root) return path + ": root cannot carry a triangle flag";
  if (v.flag && v.children.empty()) return path + ": flagged vertex must have a child";
  for (size_t i = 0; i < v.children.size(); ++i) {
    const CactusTree& ch = v.children[i];
    if (v.flag && i + 1 == v.children.size() && ch.flag)
      return path + ": rightmost child of a flagged vertex must be unflagged";
    auto sub = validate_rec(ch, false, next_color(v.color), path + "/" + std::to_string(i));
    if (sub) return sub;
  }
  return std::nullopt;
}

void profile_rec(const CactusTree& v, TreeProfile& pr) {
  switch (v.color) {
    case Color::White: ++pr.p1; if (v.flag) ++pr.a; break;
    case Color::Black: ++pr.p2; if (v.flag) ++pr.b; break;
    case Color::Grey:  ++pr.p3; if (v.flag) ++pr.c; break;
  }
  for (const auto& ch : v.children) profile_rec(ch, pr);
}

}  // namespace

std::optional<std::string> validate_tree(const CactusTree& t) {
  return validate_rec(t, true, Color::White, "root");
}

TreeProfile profile(const CactusTree& t) {
  TreeProfile pr;
  profile_rec(t, pr);
  return pr;
}

namespace {

// Resource budget: vertices per color and flags per category.
struct Budget {
  std::array<int, 6> v{};  // p1,p2,p3,a,b,c
  bool operator<(const Budget& o) const { return v < o.v; }
  bool operator==(const Budget& o) const { return v == o.v; }
  bool zero() const {
    for (int x : v) if (x != 0) return false;
    return true;
  }
  bool contains(const Budget& o) const {
    for (int i = 0; i < 6; ++i) if (o.v[i] > v[i]) return false;
    return true;
  }
  Budget minus(const Budget& o) const {
    Budget r = *this;
    for (int i = 0; i < 6; ++i) r.v[i] -= o.v[i];
    return r;
  }
};

int color_index(Color c) { return static_cast<int>(c); }
int flag_index(Color c) { return 3 + static_cast<int>(c); }  // white->a, black->b, grey->c

struct TreeGen {
  // Subtrees rooted at `color` consuming exactly `budget` (root unflagged;
  // the parent decides the root flag and pays for it separately).
  std::map<std::pair<int, Budget>, std::vector<CactusTree>> subtree_memo;
  // Ordered child sequences of color `color` consuming exactly `budget`,
  // child flags included.
  std::map<std::pair<int, Budget>, std::vector<std::vector<CactusTree>>> seq_memo;

  const std::vector<CactusTree>& subtrees(Color color, const Budget& budget) {
    auto key = std::make_pair(color_index(color), budget);
    auto it = subtree_memo.find(key);
    if (it != subtree_memo.end()) return it->second;
    std::vector<CactusTree> out;
    if (budget.v[color_index(color)] >= 1) {
      Budget rest = budget;
      rest.v[color_index(color)] -= 1;
      for (const auto& seq : sequences(next_color(color), rest)) {
        CactusTree node;
        node.color = color;
        node.children = seq;
        out.push_back(std::move(node));
      }
    }
    return subtree_memo.emplace(key, std::move(out)).first->second;
  }

  const std::vector<std::vector<CactusTree>>& sequences(Color color, const Budget& budget) {
    auto key = std::make_pair(color_index(color), budget);
    auto it = seq_memo.find(key);
    if (it != seq_memo.end()) return it->second;
    std::vector<std::vector<CactusTree>> out;
    if (budget.zero()) {
      out.push_back({});
    } else if (budget.v[color_index(color)] >= 1) {
      // Split off the first child; iterate its exact consumption.
      Budget first;
      auto rec = [&](auto&& self, int i) -> void {
        if (i == 6) {
          if (first.v[color_index(color)] < 1) return;
          const auto& tails = sequences(color, budget.minus(first));
          if (tails.empty()) return;
          for (int flagged = 0; flagged <= 1; ++flagged) {
            Budget inner = first;
            if (flagged) {
              if (inner.v[flag_index(color)] < 1) continue;
              inner.v[flag_index(color)] -= 1;
            }
            for (const auto& sub : subtrees(color, inner)) {
              CactusTree child = sub;
              if (flagged) {
                // Flag only valid on a vertex with children whose rightmost
                // child is itself unflagged (triangles share no tree edge).
                if (child.children.empty() || child.children.back().flag) continue;
                child.flag = true;
              }
              for (const auto& rest : tails) {
                std::vector<CactusTree> seq;
                seq.reserve(rest.size() + 1);
                seq.push_back(child);
                seq.insert(seq.end(), rest.begin(), rest.end());
                out.push_back(std::move(seq));
              }
            }
          }
          return;
        }
        // The child's own flag category contributes at most one unit here;
        // deeper flags of any category may also be consumed by the subtree.
        for (first.v[i] = 0; first.v[i] <= budget.v[i]; ++first.v[i]) self(self, i + 1);
        first.v[i] = 0;
      };
      rec(rec, 0);
    }
    return seq_memo.emplace(key, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<CactusTree> enumerate_ct(const TreeProfile& pr, int limit) {
  if (pr.p1 + pr.p2 + pr.p3 > limit)
    throw LimitExceeded("tree profile size exceeds limit " + std::to_string(limit));
  if (pr.p1 < 1 || pr.p2 < 0 || pr.p3 < 0 || pr.a < 0 || pr.b < 0 || pr.c < 0) return {};
  static TreeGen gen;  // shared memo; profiles are small
  Budget budget;
  budget.v = {pr.p1, pr.p2, pr.p3, pr.a, pr.b, pr.c};
  return gen.subtrees(Color::White, budget);
}

mpz_class ct_count_formula(const TreeProfile& pr) {
  if (pr.p1 < 1 || pr.p2 < 1 || pr.p3 < 1)
    throw std::invalid_argument("ct_count_formula requires p1,p2,p3 >= 1; use enumerate_ct");
  const long p1 = pr.p1, p2 = pr.p2, p3 = pr.p3, a = pr.a, b = pr.b, c = pr.c;
  mpz_class tri = multinomial(p1 + p2 - 1 - a, {p1 - 1, p2 - a - b}) *
                  multinomial(p2 + p3 - 1 - b, {p2 - 1, p3 - b - c}) *
                  multinomial(p1 + p3 - 2 - c, {p3 - 1, p1 - 1 - a - c});
  mpq_class result = mpq_class(mpz_class(a * (b - p3) + p2 * p3) * tri, mpz_class(p1 * p2 * p3));
  result.canonicalize();
  if (result.get_den() != 1) throw std::logic_error("ct_count_formula: non-integral result");
  return result.get_num();
}

std::map<TreeProfile, mpz_class> gf_coefficients(int max_vertices, int max_flags) {
  if (max_vertices > 10) throw std::invalid_argument("gf cap too large for the memory budget");
  const int v = 6;
  std::vector<int> caps{max_vertices, max_vertices, max_vertices, max_flags, max_flags, max_flags};
  std::vector<TruncatedSeries::GroupCap> gcaps{{{0, 1, 2}, max_vertices}};
  auto S = [&](int var) { return TruncatedSeries::variable(v, caps, var, gcaps); };
  auto C1 = TruncatedSeries::constant(v, caps, 1, gcaps);
  TruncatedSeries x1 = S(0), x2 = S(1), x3 = S(2), y1 = S(3), y2 = S(4), y3 = S(5);
  TruncatedSeries W(v, caps, gcaps), B = W, G = W;
  auto step = [&](const TruncatedSeries& w, const TruncatedSeries& b, const TruncatedSeries& g) {
    TruncatedSeries nw = x1 * (C1 - b * (C1 + g * y2)).reciprocal();
    TruncatedSeries nb = x2 * (C1 - g * (C1 + w * y3)).reciprocal();
    TruncatedSeries ng = x3 * (C1 - w * (C1 + b * y1)).reciprocal();
    return std::array<TruncatedSeries, 3>{nw, nb, ng};
  };
  for (int it = 0; it < max_vertices + 1; ++it) {
    auto [nw, nb, ng] = step(W, B, G);
    W = nw; B = nb; G = ng;
  }
  auto [fw, fb, fg] = step(W, B, G);
  if (fw != W || fb != B || fg != G)
    throw std::logic_error("gf fixed point failed to stabilize under the caps");
  std::map<TreeProfile, mpz_class> out;
  for (const auto& [e, coeff] : W.terms()) {
    mpq_class q = coeff;
    q.canonicalize();
    if (q.get_den() != 1) throw std::logic_error("gf coefficient not integral");
    out[TreeProfile{e[0], e[1], e[2], e[3], e[4], e[5]}] = q.get_num();
  }
  return out;
}

}  // namespace cactus3
