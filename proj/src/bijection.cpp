#include "cactus3/bijection.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cactus3 {

namespace {

int find_block(const std::vector<std::vector<int>>& blocks, int x) {
  for (size_t i = 0; i < blocks.size(); ++i)
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), x)) return static_cast<int>(i);
  throw std::logic_error("element not covered by blocks");
}

}  // namespace

LabeledTree build_labeled_tree(const PartitionedCactus& pc) {
  if (auto v = validate(pc)) throw std::invalid_argument(v->message);
  IndexedBlocks ib = bijection_blocks(pc);
  MarkerSet ms = markers(pc);
  const int p1 = static_cast<int>(ib.w.size());
  const int p2 = static_cast<int>(ib.b.size());
  const int p3 = static_cast<int>(ib.g.size());
  Permutation a3i = pc.alpha3.inverse();

  LabeledTree T;
  T.verts.resize(p1 + p2 + p3);
  auto white_id = [&](int i) { return i; };
  auto black_id = [&](int j) { return p1 + j; };
  auto grey_id = [&](int k) { return p1 + p2 + k; };
  for (int i = 0; i < p1; ++i) T.verts[white_id(i)] = {Color::White, i, -1, {}, false, 1};
  for (int j = 0; j < p2; ++j) T.verts[black_id(j)] = {Color::Black, j, -1, {}, false, 1};
  for (int k = 0; k < p3; ++k) T.verts[grey_id(k)] = {Color::Grey, k, -1, {}, false, 1};
  T.root = white_id(p1 - 1);  // the block containing 1

  // parent of black j: the white block containing its last-passage triangle;
  // siblings ordered by that triangle's white traversal label.
  std::vector<std::pair<int, int>> order;  // (sort key, child id)
  auto attach = [&](std::vector<std::pair<int, int>>& items) {
    std::sort(items.begin(), items.end());
  };
  std::vector<std::vector<std::pair<int, int>>> kids(T.verts.size());
  for (int j = 0; j < p2; ++j) {
    int parent = white_id(find_block(ib.w, ms.black_last[j]));
    T.verts[black_id(j)].parent = parent;
    kids[parent].push_back({ms.black_last[j], black_id(j)});
  }
  // parent of grey k: the black block containing alpha3(m3^k); siblings by
  // the black traversal label alpha3^-1 alpha2^-1 alpha3 (m3^k).
  for (int k = 0; k < p3; ++k) {
    int parent = black_id(find_block(ib.b, ms.grey_last[k]));
    T.verts[grey_id(k)].parent = parent;
    kids[parent].push_back({a3i(pc.alpha2.inverse()(ms.grey_last[k])), grey_id(k)});
  }
  // parent of non-root white i: the grey block containing m1^i; siblings by
  // the grey traversal label alpha3^-1(m1^i).
  for (int i = 0; i < p1 - 1; ++i) {
    int parent = grey_id(find_block(ib.g, ms.m1[i]));
    T.verts[white_id(i)].parent = parent;
    kids[parent].push_back({a3i(ms.m1[i]), white_id(i)});
  }
  for (size_t v = 0; v < T.verts.size(); ++v) {
    attach(kids[v]);
    for (auto& [key, child] : kids[v]) T.verts[v].children.push_back(child);
  }
  (void)order;

  // Depths by BFS; connectedness is a theorem of the construction.
  std::vector<int> stack{T.root};
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int ch : T.verts[v].children) {
      T.verts[ch].depth = T.verts[v].depth + 1;
      stack.push_back(ch);
    }
  }
  if (reached != static_cast<int>(T.verts.size()))
    throw std::logic_error("labeled tree is not connected");
  return T;
}

namespace {

// Last-passage triangle index of a vertex's block, by color.
int last_passage(const LabeledTree::Vertex& v, const MarkerSet& ms) {
  switch (v.color) {
    case Color::White: return ms.white_last[v.block];
    case Color::Black: return ms.black_last[v.block];
    case Color::Grey: return ms.grey_last[v.block];
  }
  throw std::logic_error("bad color");
}

CactusTree strip_labels(const LabeledTree& T, int v) {
  CactusTree t;
  t.color = T.verts[v].color;
  t.flag = T.verts[v].flag;
  for (int ch : T.verts[v].children) t.children.push_back(strip_labels(T, ch));
  return t;
}

}  // namespace

CactusTree attach_triangles(LabeledTree& T, const PartitionedCactus& pc) {
  MarkerSet ms = markers(pc);
  for (size_t v = 0; v < T.verts.size(); ++v) {
    auto& vert = T.verts[v];
    if (static_cast<int>(v) == T.root || vert.children.empty()) continue;
    const auto& rightmost = T.verts[vert.children.back()];
    vert.flag = last_passage(vert, ms) == last_passage(rightmost, ms);
  }
  return strip_labels(T, T.root);
}

ReverseLabels reverse_labels(const LabeledTree& T) {
  // Left-to-right order within a level is the preorder restriction.
  std::vector<int> preorder;
  std::vector<int> stack{T.root};
  std::vector<int> dfs;
  {
    // iterative preorder with left-to-right children
    std::vector<int> st{T.root};
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      preorder.push_back(v);
      for (auto it = T.verts[v].children.rbegin(); it != T.verts[v].children.rend(); ++it)
        st.push_back(*it);
    }
  }
  std::vector<int> pre_rank(T.verts.size());
  for (size_t r = 0; r < preorder.size(); ++r) pre_rank[preorder[r]] = static_cast<int>(r);

  ReverseLabels rl;
  rl.label.assign(T.verts.size(), 0);
  for (Color color : {Color::White, Color::Black, Color::Grey}) {
    std::vector<int> verts;
    for (size_t v = 0; v < T.verts.size(); ++v)
      if (T.verts[v].color == color) verts.push_back(static_cast<int>(v));
    // depth ascending; within a depth level right-to-left
    std::sort(verts.begin(), verts.end(), [&](int u, int v) {
      if (T.verts[u].depth != T.verts[v].depth) return T.verts[u].depth < T.verts[v].depth;
      return pre_rank[u] > pre_rank[v];
    });
    int next = static_cast<int>(verts.size());
    std::vector<int>& table = color == Color::White ? rl.white
                            : color == Color::Black ? rl.black : rl.grey;
    table.assign(verts.size() + 1, -1);
    for (int v : verts) {
      rl.label[v] = next;
      table[next] = v;
      --next;
    }
  }
  return rl;
}

namespace {

// Blocks of each color reordered by reverse label (index l-1 holds the block
// with new label l), plus the matching marker arrays.
struct Reindexed {
  std::vector<std::vector<int>> w, b, g;     // blocks, new order
  std::vector<int> m1, m2p, m3;              // markers, new order
  std::vector<int> black_last, grey_last;    // last-passage triangles, new order
};

Reindexed reindex(const PartitionedCactus& pc, const LabeledTree& T, const ReverseLabels& rl) {
  IndexedBlocks ib = bijection_blocks(pc);
  MarkerSet ms = markers(pc);
  Reindexed r;
  const int p1 = static_cast<int>(ib.w.size());
  const int p2 = static_cast<int>(ib.b.size());
  const int p3 = static_cast<int>(ib.g.size());
  for (int l = 1; l <= p1; ++l) {
    int blk = T.verts[rl.white[l]].block;
    r.w.push_back(ib.w[blk]);
    r.m1.push_back(ms.m1[blk]);
  }
  for (int l = 1; l <= p2; ++l) {
    int blk = T.verts[rl.black[l]].block;
    r.b.push_back(ib.b[blk]);
    r.m2p.push_back(ms.m2p[blk]);
    r.black_last.push_back(ms.black_last[blk]);
  }
  for (int l = 1; l <= p3; ++l) {
    int blk = T.verts[rl.grey[l]].block;
    r.g.push_back(ib.g[blk]);
    r.m3.push_back(ms.m3[blk]);
    r.grey_last.push_back(ms.grey_last[blk]);
  }
  return r;
}

Permutation lambda_from_strings(int n, const std::vector<std::vector<int>>& strings) {
  std::vector<int> one_line(n);
  int pos = 0;
  for (const auto& s : strings)
    for (int x : s) one_line[x - 1] = ++pos;
  if (pos != n) throw std::logic_error("relabeling strings do not cover {1..N}");
  return Permutation(std::move(one_line));
}

RelabelingTriple lambdas_from_reindexed(const PartitionedCactus& pc, const Reindexed& r) {
  Permutation a3i = pc.alpha3.inverse();
  std::vector<std::vector<int>> omega, upsilon, nu;
  for (const auto& blk : r.w) omega.push_back(blk);  // already ascending
  for (const auto& blk : r.b) {
    std::vector<int> s;
    for (int x : blk) s.push_back(a3i(x));
    std::sort(s.begin(), s.end());
    upsilon.push_back(std::move(s));
  }
  for (const auto& blk : r.g) nu.push_back(blk);
  return RelabelingTriple{lambda_from_strings(pc.n, omega), lambda_from_strings(pc.n, upsilon),
                          lambda_from_strings(pc.n, nu)};
}

}  // namespace

RelabelingTriple relabelings(const PartitionedCactus& pc, const LabeledTree& T) {
  ReverseLabels rl = reverse_labels(T);
  return lambdas_from_reindexed(pc, reindex(pc, T, rl));
}

namespace {

std::vector<int> sorted_image(const Permutation& lam, const std::set<int>& s) {
  std::vector<int> out;
  for (int x : s) out.push_back(lam(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> complement(int n, const std::set<int>& s) {
  std::vector<int> out;
  for (int u = 1; u <= n; ++u)
    if (!s.count(u)) out.push_back(u);
  return out;
}

// Position (1-based) of v in the ascending vector vals.
int rank_of(const std::vector<int>& vals, int v) {
  auto it = std::lower_bound(vals.begin(), vals.end(), v);
  if (it == vals.end() || *it != v) throw std::logic_error("value outside expected range");
  return static_cast<int>(it - vals.begin()) + 1;
}

}  // namespace

ImageTuple theta_forward(const PartitionedCactus& pc, ForwardTrace* trace) {
  const int n = pc.n;
  LabeledTree T = build_labeled_tree(pc);
  CactusTree tau = attach_triangles(T, pc);
  ReverseLabels rl = reverse_labels(T);
  Reindexed r = reindex(pc, T, rl);
  RelabelingTriple lam = lambdas_from_reindexed(pc, r);
  Permutation a3i = pc.alpha3.inverse();
  Permutation a2i = pc.alpha2.inverse();
  const int p1 = static_cast<int>(r.w.size());
  const int p2 = static_cast<int>(r.b.size());
  const int p3 = static_cast<int>(r.g.size());

  std::set<int> white_markers;  // m1^i, i <= p1-1
  for (int i = 0; i < p1 - 1; ++i) white_markers.insert(r.m1[i]);
  std::set<int> black_triangles(r.black_last.begin(), r.black_last.end());
  std::set<int> grey_triangles(r.grey_last.begin(), r.grey_last.end());

  std::set<int> s0_src = white_markers;
  s0_src.insert(black_triangles.begin(), black_triangles.end());
  std::vector<int> s0 = sorted_image(lam.lambda1, s0_src);

  std::set<int> s1_src(r.m3.begin(), r.m3.end());
  for (int i = 0; i < p1 - 1; ++i) s1_src.insert(a3i(r.m1[i]));
  std::vector<int> s1 = sorted_image(lam.lambda3, s1_src);

  std::set<int> s2_src(r.m2p.begin(), r.m2p.end());
  for (int k = 0; k < p3; ++k) s2_src.insert(a3i(a2i(r.grey_last[k])));
  std::vector<int> s2 = sorted_image(lam.lambda2, s2_src);

  std::vector<int> chi;
  for (int k = 0; k < p3; ++k) {
    int v = r.grey_last[k];
    if (!white_markers.count(v) && !black_triangles.count(v)) chi.push_back(lam.lambda1(v));
  }

  std::set<int> e1_excl, e2_excl;
  for (int v : white_markers) e1_excl.insert(lam.lambda1(v));
  for (int v : grey_triangles) e1_excl.insert(lam.lambda1(v));
  for (int v : black_triangles) e2_excl.insert(lam.lambda1(v));
  for (int v : grey_triangles) e2_excl.insert(lam.lambda1(v));
  std::vector<int> e1 = complement(n, e1_excl);
  std::vector<int> e2 = complement(n, e2_excl);
  std::vector<int> cod1 = complement(n, std::set<int>(s1.begin(), s1.end()));
  std::vector<int> cod2 = complement(n, std::set<int>(s2.begin(), s2.end()));

  Permutation lam1_inv = lam.lambda1.inverse();
  std::map<int, int> st1, st2;
  std::vector<int> sig1(e1.size()), sig2(e2.size());
  for (size_t t = 0; t < e1.size(); ++t) {
    int image = lam.lambda3(a3i(lam1_inv(e1[t])));
    st1[e1[t]] = image;
    sig1[t] = rank_of(cod1, image);
  }
  for (size_t t = 0; t < e2.size(); ++t) {
    int image = lam.lambda2(a3i(a2i(lam1_inv(e2[t]))));
    st2[e2[t]] = image;
    sig2[t] = rank_of(cod2, image);
  }

  ImageTuple tup{n, p1, p2, p3, std::move(tau), std::move(s0), std::move(s1), std::move(s2),
                 std::move(chi), Permutation(std::move(sig1)), Permutation(std::move(sig2))};
  if (auto err = validate_tuple(tup))
    throw std::logic_error("theta_forward produced an invalid tuple: " + *err);
  if (trace) {
    MarkerSet ms;
    ms.m1 = r.m1;
    ms.m2p = r.m2p;
    ms.m3 = r.m3;
    ms.white_last = r.m1;
    ms.black_last = r.black_last;
    ms.grey_last = r.grey_last;
    *trace = ForwardTrace{std::move(ms), std::move(T), std::move(lam),
                          std::move(e1), std::move(e2), std::move(st1), std::move(st2)};
  }
  return tup;
}

std::optional<std::string> validate_tuple(const ImageTuple& tup) {
  auto fail = [](const std::string& m) { return std::optional<std::string>(m); };
  if (tup.p1 < 1 || tup.p2 < 1 || tup.p3 < 1) return fail("block counts must be >= 1");
  if (auto err = validate_tree(tup.tree)) return fail("tree: " + *err);
  TreeProfile pr = profile(tup.tree);
  if (pr.p1 != tup.p1 || pr.p2 != tup.p2 || pr.p3 != tup.p3)
    return fail("tree profile disagrees with (p1,p2,p3)");
  const int n = tup.n;
  auto check_set = [&](const std::vector<int>& s, int size, const char* name)
      -> std::optional<std::string> {
    if (static_cast<int>(s.size()) != size)
      return fail(std::string(name) + " has wrong size");
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > n) return fail(std::string(name) + " out of range");
      if (i && s[i] <= s[i - 1]) return fail(std::string(name) + " not strictly ascending");
    }
    return std::nullopt;
  };
  if (auto e = check_set(tup.s0, tup.p1 - 1 + tup.p2 - pr.a, "S0")) return e;
  if (auto e = check_set(tup.s1, tup.p1 - 1 + tup.p3 - pr.c, "S1")) return e;
  if (auto e = check_set(tup.s2, tup.p2 + tup.p3 - pr.b, "S2")) return e;
  if (tup.s1.empty() || tup.s1.back() != n) return fail("S1 must contain N");
  if (tup.s2.empty() || tup.s2.back() != n) return fail("S2 must contain N");
  if (static_cast<int>(tup.chi.size()) != tup.p3 - pr.b - pr.c) return fail("chi has wrong size");
  std::set<int> seen;
  for (int v : tup.chi) {
    if (v < 1 || v > n) return fail("chi out of range");
    if (!seen.insert(v).second) return fail("chi entries not distinct");
    if (std::binary_search(tup.s0.begin(), tup.s0.end(), v)) return fail("chi intersects S0");
  }
  if (tup.sigma1.degree() != n - tup.p1 + 1 - tup.p3 + pr.c) return fail("sigma1 degree wrong");
  if (tup.sigma2.degree() != n - tup.p2 - tup.p3 + pr.b) return fail("sigma2 degree wrong");
  return std::nullopt;
}

namespace {

// Flat view of an image tuple's tree with reverse labels.
struct ShapeInfo {
  LabeledTree T;  // block indices unused (set to -1)
  ReverseLabels rl;
  int p1, p2, p3;
};

void flatten(const CactusTree& t, int parent, LabeledTree& T) {
  int id = static_cast<int>(T.verts.size());
  T.verts.push_back({t.color, -1, parent,
                     {}, t.flag, parent < 0 ? 1 : T.verts[parent].depth + 1});
  if (parent >= 0) T.verts[parent].children.push_back(id);
  for (const auto& ch : t.children) flatten(ch, id, T);
}

ShapeInfo shape_info(const ImageTuple& tup) {
  ShapeInfo si;
  flatten(tup.tree, -1, si.T);
  si.T.root = 0;
  si.rl = reverse_labels(si.T);
  si.p1 = tup.p1;
  si.p2 = tup.p2;
  si.p3 = tup.p3;
  return si;
}

// Slot references used when distributing a sorted support set over the
// marker slots in interval order.
struct SlotGroup {
  std::vector<std::pair<char, int>> slots;  // ('w'|'b'|'g'|..., reverse label)
};

void assign_groups(const std::vector<SlotGroup>& groups, const std::vector<int>& values,
                   const std::function<void(char, int, int)>& put) {
  if (groups.size() != values.size())
    throw std::invalid_argument("inconsistent tuple: slot count differs from set size");
  for (size_t i = 0; i < groups.size(); ++i)
    for (auto [kind, label] : groups[i].slots) put(kind, label, values[i]);
}

}  // namespace

ResolvedMarkers resolve_markers(const ImageTuple& tup) {
  if (auto err = validate_tuple(tup)) throw std::invalid_argument("invalid tuple: " + *err);
  ShapeInfo si = shape_info(tup);
  const auto& T = si.T;
  const auto& rl = si.rl;
  ResolvedMarkers rm;
  rm.w.assign(si.p1 + 1, 0);
  rm.bt.assign(si.p2 + 1, 0);
  rm.g.assign(si.p3 + 1, 0);
  rm.x.assign(si.p1 + 1, 0);
  rm.bp.assign(si.p2 + 1, 0);
  rm.y.assign(si.p3 + 1, 0);
  rm.z.assign(si.p3 + 1, 0);
  rm.w[si.p1] = tup.n;  // sentinel: the root interval ends at N

  // S0: white-marker slots ascending in reverse-label order; black slots lie
  // in the parent white's interval, merged with its marker on a grey-rooted
  // triangle (flag on the white parent's rightmost black child... the flag
  // sits on the middle white vertex for grey-rooted triangles).
  {
    std::vector<SlotGroup> groups;
    for (int l = 1; l <= si.p1; ++l) {
      int v = rl.white[l];
      const auto& children = T.verts[v].children;
      bool merged = false;
      for (size_t c = 0; c < children.size(); ++c) {
        int blab = rl.label[children[c]];
        bool rightmost = c + 1 == children.size();
        if (rightmost && T.verts[v].flag && l < si.p1) {
          groups.push_back({{{'b', blab}, {'w', l}}});
          merged = true;
        } else {
          groups.push_back({{{'b', blab}}});
        }
      }
      if (l < si.p1 && !merged) groups.push_back({{{'w', l}}});
    }
    assign_groups(groups, tup.s0, [&](char kind, int label, int value) {
      (kind == 'w' ? rm.w : rm.bt)[label] = value;
    });
  }
  // S1: grey markers G_k plus white-child slots in the grey intervals,
  // merged on a black-rooted triangle (flag on the grey vertex).
  {
    std::vector<SlotGroup> groups;
    for (int k = 1; k <= si.p3; ++k) {
      int v = rl.grey[k];
      const auto& children = T.verts[v].children;
      bool merged = false;
      for (size_t c = 0; c < children.size(); ++c) {
        int wlab = rl.label[children[c]];
        bool rightmost = c + 1 == children.size();
        if (rightmost && T.verts[v].flag) {
          groups.push_back({{{'x', wlab}, {'g', k}}});
          merged = true;
        } else {
          groups.push_back({{{'x', wlab}}});
        }
      }
      if (!merged) groups.push_back({{{'g', k}}});
    }
    assign_groups(groups, tup.s1, [&](char kind, int label, int value) {
      (kind == 'x' ? rm.x : rm.g)[label] = value;
    });
  }
  // S2: black markers B'_j plus grey-child slots, merged on a white-rooted
  // triangle (flag on the black vertex).
  {
    std::vector<SlotGroup> groups;
    for (int j = 1; j <= si.p2; ++j) {
      int v = rl.black[j];
      const auto& children = T.verts[v].children;
      bool merged = false;
      for (size_t c = 0; c < children.size(); ++c) {
        int glab = rl.label[children[c]];
        bool rightmost = c + 1 == children.size();
        if (rightmost && T.verts[v].flag) {
          groups.push_back({{{'y', glab}, {'p', j}}});
          merged = true;
        } else {
          groups.push_back({{{'y', glab}}});
        }
      }
      if (!merged) groups.push_back({{{'p', j}}});
    }
    assign_groups(groups, tup.s2, [&](char kind, int label, int value) {
      (kind == 'y' ? rm.y : rm.bp)[label] = value;
    });
  }
  // lambda1(alpha3(m3^k)): from the triangle coincidences where available,
  // from chi (ascending k) otherwise.
  {
    size_t chi_next = 0;
    for (int k = 1; k <= si.p3; ++k) {
      int v = rl.grey[k];
      int parent = T.verts[v].parent;
      if (T.verts[v].flag) {
        rm.z[k] = rm.w[rl.label[T.verts[v].children.back()]];
      } else if (parent >= 0 && T.verts[parent].flag &&
                 T.verts[parent].children.back() == v) {
        rm.z[k] = rm.bt[rl.label[parent]];
      } else {
        if (chi_next >= tup.chi.size())
          throw std::invalid_argument("inconsistent tuple: chi exhausted");
        rm.z[k] = tup.chi[chi_next++];
      }
    }
    if (chi_next != tup.chi.size())
      throw std::invalid_argument("inconsistent tuple: chi not fully consumed");
  }
  return rm;
}

PartitionedCactus theta_inverse(const ImageTuple& tup) {
  const int n = tup.n;
  ResolvedMarkers rm = resolve_markers(tup);
  const int p1 = tup.p1, p2 = tup.p2, p3 = tup.p3;

  std::set<int> e1_excl, e2_excl;
  for (int i = 1; i < p1; ++i) e1_excl.insert(rm.w[i]);
  for (int k = 1; k <= p3; ++k) e1_excl.insert(rm.z[k]);
  for (int j = 1; j <= p2; ++j) e2_excl.insert(rm.bt[j]);
  for (int k = 1; k <= p3; ++k) e2_excl.insert(rm.z[k]);
  std::vector<int> e1 = complement(n, e1_excl);
  std::vector<int> e2 = complement(n, e2_excl);
  std::vector<int> cod1 = complement(n, std::set<int>(tup.s1.begin(), tup.s1.end()));
  std::vector<int> cod2 = complement(n, std::set<int>(tup.s2.begin(), tup.s2.end()));
  if (static_cast<int>(e1.size()) != tup.sigma1.degree() ||
      static_cast<int>(e2.size()) != tup.sigma2.degree())
    throw std::invalid_argument("inconsistent tuple: partial permutation domain size");

  // Extended sigma-bars on all of {1..N}.
  std::vector<int> sb1(n + 1, 0), sb2(n + 1, 0);
  auto put = [n](std::vector<int>& sb, int from, int to) {
    if (from < 1 || from > n) throw std::invalid_argument("inconsistent tuple: marker range");
    if (sb[from] != 0 && sb[from] != to)
      throw std::invalid_argument("inconsistent tuple: conflicting sigma-bar extension");
    sb[from] = to;
  };
  for (size_t t = 0; t < e1.size(); ++t) put(sb1, e1[t], cod1[tup.sigma1(static_cast<int>(t) + 1) - 1]);
  for (int k = 1; k <= p3; ++k) put(sb1, rm.z[k], rm.g[k]);
  for (int i = 1; i < p1; ++i) put(sb1, rm.w[i], rm.x[i]);
  for (size_t t = 0; t < e2.size(); ++t) put(sb2, e2[t], cod2[tup.sigma2(static_cast<int>(t) + 1) - 1]);
  for (int j = 1; j <= p2; ++j) put(sb2, rm.bt[j], rm.bp[j]);
  for (int k = 1; k <= p3; ++k) put(sb2, rm.z[k], rm.y[k]);
  Permutation sigma_bar1(std::vector<int>(sb1.begin() + 1, sb1.end()));
  Permutation sigma_bar2(std::vector<int>(sb2.begin() + 1, sb2.end()));
  Permutation sb1_inv = sigma_bar1.inverse();
  Permutation sb2_inv = sigma_bar2.inverse();

  // Which block (in lambda1-space) each value of {1..N} belongs to.
  std::vector<int> white_of(n + 1, 0), grey_of(n + 1, 0), black_of(n + 1, 0);
  for (int l = 1; l <= p1; ++l)
    for (int v = rm.w[l - 1] + 1; v <= rm.w[l]; ++v) white_of[v] = l;
  for (int k = 1; k <= p3; ++k)
    for (int v = rm.g[k - 1] + 1; v <= rm.g[k]; ++v) grey_of[sb1_inv(v)] = k;
  for (int j = 1; j <= p2; ++j)
    for (int v = rm.bp[j - 1] + 1; v <= rm.bp[j]; ++v) black_of[sb2_inv(v)] = j;
  for (int v = 1; v <= n; ++v)
    if (!white_of[v] || !grey_of[v] || !black_of[v])
      throw std::invalid_argument("inconsistent tuple: marker values leave coverage gaps");

  // Iterative reconstruction of the relabeling permutations.
  std::vector<int> lam1(n + 1, 0), lam2(n + 1, 0), lam3(n + 1, 0);
  std::vector<int> next2(p2 + 1), next3(p3 + 1);
  std::vector<char> used1(n + 1, 0);
  for (int k = 1; k <= p3; ++k) next3[k] = rm.g[k - 1] + 1;
  for (int j = 1; j <= p2; ++j) next2[j] = rm.bp[j - 1] + 1;
  auto take_white = [&](int l) {
    for (int v = rm.w[l - 1] + 1; v <= rm.w[l]; ++v)
      if (!used1[v]) {
        used1[v] = 1;
        return v;
      }
    throw std::logic_error("reconstruction stalled in a white block");
  };
  lam1[1] = take_white(p1);
  for (int i = 1; i <= n; ++i) {
    int k = grey_of[lam1[i]];
    if (next3[k] > rm.g[k]) throw std::logic_error("reconstruction stalled in a grey block");
    lam3[i] = next3[k]++;
    int u = sb1_inv(lam3[i]);  // lambda1(alpha3(i))
    int j = black_of[u];
    if (next2[j] > rm.bp[j]) throw std::logic_error("reconstruction stalled in a black block");
    lam2[i] = next2[j]++;
    int v = sb2_inv(lam2[i]);  // lambda1(alpha2 alpha3 (i))
    if (i < n) lam1[i + 1] = take_white(white_of[v]);
  }

  Permutation lambda1(std::vector<int>(lam1.begin() + 1, lam1.end()));
  Permutation lambda2(std::vector<int>(lam2.begin() + 1, lam2.end()));
  Permutation lambda3(std::vector<int>(lam3.begin() + 1, lam3.end()));

  Permutation gamma = Permutation::long_cycle(n);
  Permutation alpha1 = compose(gamma, compose(lambda2.inverse(), compose(sigma_bar2, lambda1)));
  Permutation alpha2 =
      compose(lambda1.inverse(),
              compose(sb2_inv, compose(lambda2, compose(lambda3.inverse(),
                                                        compose(sigma_bar1, lambda1)))));

  Permutation lam1_inv = lambda1.inverse();
  auto blocks_from_intervals = [&](const std::vector<int>& ends, int count,
                                   const std::function<int(int)>& to_lam1_space) {
    std::vector<std::vector<int>> blocks(count);
    for (int l = 1; l <= count; ++l)
      for (int v = ends[l - 1] + 1; v <= ends[l]; ++v)
        blocks[l - 1].push_back(lam1_inv(to_lam1_space(v)));
    return blocks;
  };
  auto pi1_blocks = blocks_from_intervals(rm.w, p1, [](int v) { return v; });
  auto pi2_blocks = blocks_from_intervals(rm.bp, p2, [&](int v) { return sb2_inv(v); });
  auto pi3_blocks = blocks_from_intervals(rm.g, p3, [&](int v) { return sb1_inv(v); });

  return make_partitioned_cactus(alpha1, alpha2, SetPartition(n, pi1_blocks),
                                 SetPartition(n, pi2_blocks), SetPartition(n, pi3_blocks));
}

namespace {

// Ascending k-subsets of {1..n}.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& yield) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    yield(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

// Ordered k-arrangements from the ascending pool.
void for_each_arrangement(const std::vector<int>& pool, int k,
                          const std::function<void(const std::vector<int>&)>& yield) {
  if (k < 0 || k > static_cast<int>(pool.size())) return;
  std::vector<int> cur;
  std::vector<char> used(pool.size(), 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      yield(cur);
      return;
    }
    for (size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      used[i] = 1;
      cur.push_back(pool[i]);
      self(self);
      cur.pop_back();
      used[i] = 0;
    }
  };
  rec(rec);
}

void for_each_permutation(int deg, const std::function<void(const Permutation&)>& yield) {
  std::vector<int> img(deg);
  std::iota(img.begin(), img.end(), 1);
  do {
    yield(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

}  // namespace

void enumerate_image_tuples(int p1, int p2, int p3, int n,
                            const std::function<void(const ImageTuple&)>& yield) {
  if (p1 < 1 || p2 < 1 || p3 < 1) throw std::invalid_argument("block counts must be >= 1");
  for (int a = 0; a <= p1; ++a) {
    for (int b = 0; b <= p2; ++b) {
      for (int c = 0; c <= p3; ++c) {
        const int s0_size = p1 - 1 + p2 - a;
        const int s1_size = p1 - 1 + p3 - c;
        const int s2_size = p2 + p3 - b;
        const int chi_size = p3 - b - c;
        const int d1 = n - p1 + 1 - p3 + c;
        const int d2 = n - p2 - p3 + b;
        if (s0_size < 0 || s1_size < 1 || s2_size < 1 || chi_size < 0 || d1 < 0 || d2 < 0)
          continue;
        if (s0_size > n || s1_size > n || s2_size > n || chi_size > n - s0_size) continue;
        std::vector<CactusTree> trees = enumerate_ct(TreeProfile{p1, p2, p3, a, b, c});
        if (trees.empty()) continue;
        for (const auto& tree : trees) {
          for_each_subset(n, s0_size, [&](const std::vector<int>& s0) {
            std::vector<int> chi_pool =
                complement(n, std::set<int>(s0.begin(), s0.end()));
            // S1 and S2 always contain N; choose the rest from {1..N-1}.
            for_each_subset(n - 1, s1_size - 1, [&](const std::vector<int>& s1_head) {
              std::vector<int> s1 = s1_head;
              s1.push_back(n);
              for_each_subset(n - 1, s2_size - 1, [&](const std::vector<int>& s2_head) {
                std::vector<int> s2 = s2_head;
                s2.push_back(n);
                for_each_arrangement(chi_pool, chi_size, [&](const std::vector<int>& chi) {
                  for_each_permutation(d1, [&](const Permutation& sig1) {
                    for_each_permutation(d2, [&](const Permutation& sig2) {
                      yield(ImageTuple{n, p1, p2, p3, tree, s0, s1, s2, chi, sig1, sig2});
                    });
                  });
                });
              });
            });
          });
        }
      }
    }
  }
}

}  // namespace cactus3
