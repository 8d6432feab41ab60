#pragma once

#include "cactus3/series.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cactus3 {

enum class Color { White, Black, Grey };
Color next_color(Color c);
const char* color_name(Color c);

// Rooted plane 3-colored cactus tree. A set flag on a vertex v means v,
// its parent and v's rightmost child form a triangle (rooted in the
// parent's color).
struct CactusTree {
  Color color = Color::White;
  bool flag = false;
  std::vector<CactusTree> children;

  bool operator==(const CactusTree& o) const {
    return color == o.color && flag == o.flag && children == o.children;
  }
};

struct TreeProfile {
  int p1 = 0, p2 = 0, p3 = 0;  // white / black / grey vertex counts
  int a = 0, b = 0, c = 0;     // triangles rooted in grey / white / black

  bool operator==(const TreeProfile& o) const {
    return p1 == o.p1 && p2 == o.p2 && p3 == o.p3 && a == o.a && b == o.b && c == o.c;
  }
  bool operator<(const TreeProfile& o) const {
    return std::tie(p1, p2, p3, a, b, c) < std::tie(o.p1, o.p2, o.p3, o.a, o.b, o.c);
  }
  std::string to_string() const;
};

// Structural invariant check; the violation names the offending vertex by
// its child-index path from the root.
std::optional<std::string> validate_tree(const CactusTree& t);

TreeProfile profile(const CactusTree& t);

inline constexpr int kDefaultTreeLimit = 10;

// Every cactus tree with exactly the given profile, deterministic order.
std::vector<CactusTree> enumerate_ct(const TreeProfile& pr, int limit = kDefaultTreeLimit);

// Closed-form |CT(p1,p2,p3,a,b,c)|; requires p1,p2,p3 >= 1.
mpz_class ct_count_formula(const TreeProfile& pr);

// Coefficients of the white generating function from the three-equation
// fixed point, for profiles with p1+p2+p3 <= max_vertices and flag counts
// <= max_flags. Only nonzero coefficients are returned.
std::map<TreeProfile, mpz_class> gf_coefficients(int max_vertices, int max_flags = 3);

}  // namespace cactus3
