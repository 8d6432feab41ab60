#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace cactus3 {

// Multivariate formal power series with exact rational coefficients,
// truncated to per-variable degree caps. Optional group caps bound the total
// degree over a subset of variables (used to keep the generating-function
// fixed point desk-sized). Absent monomials have coefficient 0.
class TruncatedSeries {
public:
  struct GroupCap {
    std::vector<int> vars;  // variable indices
    int cap;
  };

  TruncatedSeries() = default;
  TruncatedSeries(int var_count, std::vector<int> caps, std::vector<GroupCap> group_caps = {});

  static TruncatedSeries constant(int var_count, std::vector<int> caps, const mpq_class& c,
                                  std::vector<GroupCap> group_caps = {});
  // The monomial x_var (exponent 1 on one variable).
  static TruncatedSeries variable(int var_count, std::vector<int> caps, int var,
                                  std::vector<GroupCap> group_caps = {});

  int var_count() const { return var_count_; }
  const std::vector<int>& caps() const { return caps_; }
  const std::map<std::vector<int>, mpq_class>& terms() const { return terms_; }

  mpq_class coeff(const std::vector<int>& exps) const;
  void set_coeff(const std::vector<int>& exps, const mpq_class& c);

  bool is_zero() const { return terms_.empty(); }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const mpq_class& c) const;

  // r with trunc(s * r) = 1; requires nonzero constant term.
  TruncatedSeries reciprocal() const;

  bool operator==(const TruncatedSeries& o) const;
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
  bool admissible(const std::vector<int>& exps) const;
  void check_compatible(const TruncatedSeries& o) const;

  int var_count_ = 0;
  std::vector<int> caps_;
  std::vector<GroupCap> group_caps_;
  std::map<std::vector<int>, mpq_class> terms_;
};

// (x)_l = x(x-1)...(x-l+1) as a polynomial in variable `var`.
TruncatedSeries falling_factorial_poly(int var_count, std::vector<int> caps, int var, int l);

// binom(x,p) = (x)_p / p!.
TruncatedSeries binomial_poly(int var_count, std::vector<int> caps, int var, int p);

// Verifies sum_{b=1..a} S(a,b) (x)_b = x^a coefficient-wise; a <= cap.
// Returns true on success, throws std::invalid_argument above the cap.
bool binomial_poly_eval_check(int a, int cap = 12);

}  // namespace cactus3
