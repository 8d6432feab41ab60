#include "cactus3/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cactus3 {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("not a bijection of {1..n}");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::long_cycle(int n) {
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = i % n + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<char> seen(n, 0);
  for (const auto& cyc : cycles) {
    for (size_t t = 0; t < cyc.size(); ++t) {
      int from = cyc[t];
      int to = cyc[(t + 1) % cyc.size()];
      if (from < 1 || from > n) throw std::invalid_argument("cycle entry out of range");
      if (seen[from - 1]) throw std::invalid_argument("repeated element across cycles");
      seen[from - 1] = 1;
      img[from - 1] = to;
    }
  }
  return Permutation(std::move(img));
}

int Permutation::apply(int i) const {
  if (i < 1 || i > degree()) throw std::out_of_range("permutation argument out of range");
  return images_[i - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) inv[images_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const int n = degree();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i) {
    if (seen[i - 1]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      seen[j - 1] = 1;
      cyc.push_back(j);
      j = images_[j - 1];
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;  // already min-first and sorted by minimum
}

int Permutation::cycle_count() const {
  const int n = degree();
  std::vector<char> seen(n, 0);
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[i - 1]) continue;
    ++count;
    for (int j = i; !seen[j - 1]; j = images_[j - 1]) seen[j - 1] = 1;
  }
  return count;
}

std::string Permutation::to_cycle_string() const {
  if (degree() == 0) return "()";
  std::string s;
  for (const auto& cyc : cycles()) {
    s += '(';
    for (size_t t = 0; t < cyc.size(); ++t) {
      if (t) s += ' ';
      s += std::to_string(cyc[t]);
    }
    s += ')';
  }
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("incompatible degrees");
  std::vector<int> img(p.degree());
  for (int i = 1; i <= p.degree(); ++i) img[i - 1] = p(q(i));
  return Permutation(std::move(img));
}

}  // namespace cactus3
