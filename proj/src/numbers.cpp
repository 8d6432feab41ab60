#include "cactus3/numbers.hpp"

#include <map>
#include <stdexcept>

namespace cactus3 {

mpz_class factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class stirling2(long a, long b) {
  if (a < 0 || b < 0) throw std::invalid_argument("stirling2 of negative");
  if (b > a) return 0;
  if (a == 0) return b == 0 ? 1 : 0;
  if (b == 0) return 0;
  // S(a,b) = S(a-1,b-1) + b*S(a-1,b), row by row.
  std::vector<mpz_class> row(a + 1), prev(a + 1);
  prev[0] = 1;
  for (long i = 1; i <= a; ++i) {
    row[0] = 0;
    for (long j = 1; j <= i; ++j) row[j] = prev[j - 1] + j * prev[j];
    std::swap(row, prev);
  }
  return prev[b];
}

mpz_class multinomial(long n, const std::vector<long>& parts) {
  if (n < 0) return 0;
  long sum = 0;
  for (long k : parts) {
    if (k < 0) return 0;
    sum += k;
  }
  if (sum > n) return 0;
  mpz_class r = 1;
  long rem = n;
  for (long k : parts) {
    r *= binomial(rem, k);
    rem -= k;
  }
  return r;
}

}  // namespace cactus3
