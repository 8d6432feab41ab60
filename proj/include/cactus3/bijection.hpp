#pragma once

#include "cactus3/cactus.hpp"
#include "cactus3/permutation.hpp"
#include "cactus3/tree.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cactus3 {

// Last-passage labeled tree: flat vertex records, children ordered
// left-to-right. Vertex 0 is the white root (the pi1 block containing 1).
struct LabeledTree {
  struct Vertex {
    Color color;
    int block = 0;        // 0-based index into bijection_blocks of its color
    int parent = -1;
    std::vector<int> children;
    bool flag = false;    // triangle with parent and rightmost child
    int depth = 1;
  };
  std::vector<Vertex> verts;
  int root = 0;
};

// Reverse labels (1-based, per color) for a labeled tree or a bare shape:
// root color starts at its count, levels top-down, right-to-left.
struct ReverseLabels {
  std::vector<int> label;          // per vertex: 1..p_color
  std::vector<int> white, black, grey;  // label -> vertex id (index 0 unused)
};

struct RelabelingTriple {
  Permutation lambda1, lambda2, lambda3;
};

// Codomain element of Theta: sets ascending, chi ordered, sigmas one-line.
struct ImageTuple {
  int n = 0;
  int p1 = 0, p2 = 0, p3 = 0;
  CactusTree tree;
  std::vector<int> s0, s1, s2;
  std::vector<int> chi;
  Permutation sigma1, sigma2;

  bool operator==(const ImageTuple& o) const {
    return n == o.n && p1 == o.p1 && p2 == o.p2 && p3 == o.p3 && tree == o.tree &&
           s0 == o.s0 && s1 == o.s1 && s2 == o.s2 && chi == o.chi && sigma1 == o.sigma1 &&
           sigma2 == o.sigma2;
  }
};

// Intermediates of the forward construction, exposed for tests.
struct ForwardTrace {
  MarkerSet markers;                 // in the re-indexed (reverse-label) block order
  LabeledTree tree;                  // with flags attached
  RelabelingTriple lambdas;
  std::vector<int> e1, e2;           // domains of the partial permutations
  std::map<int, int> sigma1_partial, sigma2_partial;
};

LabeledTree build_labeled_tree(const PartitionedCactus& pc);
// Adds the triangle flags of the marker coincidences; returns the stripped
// cactus tree.
CactusTree attach_triangles(LabeledTree& T, const PartitionedCactus& pc);

ReverseLabels reverse_labels(const LabeledTree& T);

// Reorders the blocks by reverse label and builds lambda1/2/3 from the
// concatenated ascending block strings.
RelabelingTriple relabelings(const PartitionedCactus& pc, const LabeledTree& T);

ImageTuple theta_forward(const PartitionedCactus& pc, ForwardTrace* trace = nullptr);

// Size/containment invariants of an image tuple; nullopt when ok.
std::optional<std::string> validate_tuple(const ImageTuple& tup);

// lambda-images of all markers reconstructed from (tau, S0, S1, S2, chi).
struct ResolvedMarkers {
  // Indexed by reverse label (1-based, index 0 unused).
  std::vector<int> w;    // lambda1(m1^i), i = 1..p1-1; w[p1] = N sentinel
  std::vector<int> bt;   // lambda1(alpha2 alpha3 (m2'^j)), j = 1..p2
  std::vector<int> g;    // lambda3(m3^k), k = 1..p3
  std::vector<int> x;    // lambda3(alpha3^-1(m1^i)), i = 1..p1-1
  std::vector<int> bp;   // lambda2(m2'^j), j = 1..p2
  std::vector<int> y;    // lambda2(alpha3^-1 alpha2^-1 alpha3 (m3^k)), k = 1..p3
  std::vector<int> z;    // lambda1(alpha3(m3^k)), k = 1..p3
};
ResolvedMarkers resolve_markers(const ImageTuple& tup);

PartitionedCactus theta_inverse(const ImageTuple& tup);

// Exhaustive enumeration of the image set I(p1,p2,p3,n): trees x sets x chi
// x permutations under the size constraints. Oracle for the image
// characterization and right-inverse checks.
void enumerate_image_tuples(int p1, int p2, int p3, int n,
                            const std::function<void(const ImageTuple&)>& yield);

}  // namespace cactus3
