#include "cactus3/series.hpp"

#include "cactus3/numbers.hpp"

#include <stdexcept>

namespace cactus3 {

TruncatedSeries::TruncatedSeries(int var_count, std::vector<int> caps,
                                 std::vector<GroupCap> group_caps)
    : var_count_(var_count), caps_(std::move(caps)), group_caps_(std::move(group_caps)) {
  if (static_cast<int>(caps_.size()) != var_count_)
    throw std::invalid_argument("caps size must equal variable count");
}

TruncatedSeries TruncatedSeries::constant(int var_count, std::vector<int> caps, const mpq_class& c,
                                          std::vector<GroupCap> group_caps) {
  TruncatedSeries s(var_count, std::move(caps), std::move(group_caps));
  if (c != 0) s.terms_[std::vector<int>(var_count, 0)] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(int var_count, std::vector<int> caps, int var,
                                          std::vector<GroupCap> group_caps) {
  TruncatedSeries s(var_count, std::move(caps), std::move(group_caps));
  std::vector<int> e(var_count, 0);
  e[var] = 1;
  if (s.admissible(e)) s.terms_[e] = 1;
  return s;
}

bool TruncatedSeries::admissible(const std::vector<int>& exps) const {
  for (int i = 0; i < var_count_; ++i)
    if (exps[i] > caps_[i]) return false;
  for (const auto& g : group_caps_) {
    int sum = 0;
    for (int v : g.vars) sum += exps[v];
    if (sum > g.cap) return false;
  }
  return true;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (var_count_ != o.var_count_ || caps_ != o.caps_)
    throw std::invalid_argument("series cap mismatch");
}

mpq_class TruncatedSeries::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void TruncatedSeries::set_coeff(const std::vector<int>& exps, const mpq_class& c) {
  if (static_cast<int>(exps.size()) != var_count_)
    throw std::invalid_argument("exponent vector size mismatch");
  if (!admissible(exps)) {
    if (c != 0) throw std::invalid_argument("exponent vector exceeds caps");
    return;
  }
  if (c == 0) terms_.erase(exps);
  else terms_[exps] = c;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries r = *this;
  for (const auto& [e, c] : o.terms_) {
    mpq_class v = r.coeff(e) + c;
    if (v == 0) r.terms_.erase(e);
    else r.terms_[e] = v;
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries r = *this;
  for (const auto& [e, c] : o.terms_) {
    mpq_class v = r.coeff(e) - c;
    if (v == 0) r.terms_.erase(e);
    else r.terms_[e] = v;
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries r(var_count_, caps_, group_caps_);
  std::vector<int> e(var_count_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      bool ok = true;
      for (int i = 0; i < var_count_; ++i) {
        e[i] = e1[i] + e2[i];
        if (e[i] > caps_[i]) { ok = false; break; }
      }
      if (!ok || !r.admissible(e)) continue;
      mpq_class v = r.coeff(e) + c1 * c2;
      if (v == 0) r.terms_.erase(e);
      else r.terms_[e] = v;
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const mpq_class& c) const {
  TruncatedSeries r(var_count_, caps_, group_caps_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  const std::vector<int> zero(var_count_, 0);
  mpq_class c0 = coeff(zero);
  if (c0 == 0) throw std::invalid_argument("reciprocal requires nonzero constant term");
  // s = c0 (1 - u) with u having no constant term; 1/s = (1/c0) sum u^k.
  TruncatedSeries u = (TruncatedSeries::constant(var_count_, caps_, c0, group_caps_) - *this) *
                      mpq_class(1 / c0);
  int max_total = 0;
  for (int c : caps_) max_total += c;
  TruncatedSeries r = TruncatedSeries::constant(var_count_, caps_, 1, group_caps_);
  TruncatedSeries pow = TruncatedSeries::constant(var_count_, caps_, 1, group_caps_);
  for (int k = 1; k <= max_total; ++k) {
    pow = pow * u;
    if (pow.is_zero()) break;
    r = r + pow;
  }
  return r * mpq_class(1 / c0);
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  return var_count_ == o.var_count_ && caps_ == o.caps_ && terms_ == o.terms_;
}

TruncatedSeries falling_factorial_poly(int var_count, std::vector<int> caps, int var, int l) {
  TruncatedSeries r = TruncatedSeries::constant(var_count, caps, 1);
  TruncatedSeries x = TruncatedSeries::variable(var_count, caps, var);
  for (int t = 0; t < l; ++t)
    r = r * (x - TruncatedSeries::constant(var_count, caps, t));
  return r;
}

TruncatedSeries binomial_poly(int var_count, std::vector<int> caps, int var, int p) {
  return falling_factorial_poly(var_count, std::move(caps), var, p) *
         mpq_class(mpq_class(1) / mpq_class(factorial(p)));
}

bool binomial_poly_eval_check(int a, int cap) {
  if (a > cap) throw std::invalid_argument("binomial_poly_eval_check: a exceeds cap");
  std::vector<int> caps{a};
  TruncatedSeries lhs(1, caps);
  for (int b = 0; b <= a; ++b)
    lhs = lhs + falling_factorial_poly(1, caps, 0, b) * mpq_class(stirling2(a, b));
  TruncatedSeries rhs(1, caps);
  rhs.set_coeff({a}, 1);
  return lhs == rhs;
}

}  // namespace cactus3
