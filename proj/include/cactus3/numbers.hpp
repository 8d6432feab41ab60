#pragma once

#include <gmpxx.h>

#include <vector>

namespace cactus3 {

mpz_class factorial(long n);

// 0 when k < 0 or k > n.
mpz_class binomial(long n, long k);

// Stirling number of the second kind S(a,b).
mpz_class stirling2(long a, long b);

// n!/(k_1!...k_m!(n - sum k)!) with implicit remainder part; 0 if any
// part is negative or the parts exceed n.
mpz_class multinomial(long n, const std::vector<long>& parts);

}  // namespace cactus3
