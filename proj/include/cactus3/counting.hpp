#pragma once

#include "cactus3/cactus.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>

namespace cactus3 {

// M(n1,n2,n3,n): factorization counts of gamma_n keyed by the cycle counts
// of the three factors. Only nonzero entries are stored.
struct MTable {
  int n = 0;
  std::map<std::array<int, 3>, mpz_class> counts;

  mpz_class at(int n1, int n2, int n3) const;
  // Rows n1,n2,n3,count in lexicographic key order, with a header line.
  std::string to_csv() const;
};

MTable m_bruteforce(int n, int jobs = 1, int limit = kDefaultEnumerationLimit);

// Closed form for the image-set size |I(p1,p2,p3,n)|; 0 when any p_i is
// infeasible.
mpz_class i_count_formula(int p1, int p2, int p3, int n);

// |CC(p1,p2,p3,n)| as the Stirling-weighted sum over the M table. Pass a
// precomputed table to amortize the brute force.
mpz_class cc_count_stirling(int p1, int p2, int p3, int n, const MTable* table = nullptr,
                            int jobs = 1, int limit = kDefaultEnumerationLimit);

// Fully symmetric multinomial form of the image-set size.
mpz_class jackson_symmetric(int p1, int p2, int p3, int n);

struct VerificationReport {
  std::string check;
  int n = 0;
  std::string params;
  bool pass = false;
  std::string lhs, rhs;  // first mismatching values, empty on pass
};

// Coefficient-wise comparison of the generating-series identity for
// M(.,.,.,n) against the closed form, plus the independent
// falling-factorial bridge against cc_count_stirling.
VerificationReport theorem1_check(int n, int jobs = 1, int limit = kDefaultEnumerationLimit);

}  // namespace cactus3
