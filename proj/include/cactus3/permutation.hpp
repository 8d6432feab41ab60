#pragma once

#include <string>
#include <vector>

namespace cactus3 {

// Permutation of {1..n} in one-line image form. n = 0 is the empty
// permutation. Immutable after construction.
class Permutation {
public:
  Permutation() = default;

  // images[i-1] is the image of i; must be a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // (1 2 ... n), the long cycle gamma_n.
  static Permutation long_cycle(int n);
  // Cycles given as sequences over {1..n}; unmentioned points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int i) const;
  int operator()(int i) const { return apply(i); }

  Permutation inverse() const;

  const std::vector<int>& images() const { return images_; }

  // Cycle decomposition, fixed points included: each cycle starts at its
  // minimum, cycles sorted by minimum.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;

  // Cycle notation, e.g. "(1)(2 4)(3)"; "()" for n = 0.
  std::string to_cycle_string() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
  std::vector<int> images_;
};

// compose(p, q)(i) = p(q(i)): the rightmost factor acts first, matching the
// product convention of the factor triples.
Permutation compose(const Permutation& p, const Permutation& q);

}  // namespace cactus3
