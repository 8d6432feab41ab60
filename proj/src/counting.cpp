#include "cactus3/counting.hpp"

#include "cactus3/numbers.hpp"
#include "cactus3/series.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace cactus3 {

mpz_class MTable::at(int n1, int n2, int n3) const {
  auto it = counts.find({n1, n2, n3});
  return it == counts.end() ? mpz_class(0) : it->second;
}

std::string MTable::to_csv() const {
  std::ostringstream out;
  out << "n1,n2,n3,count\n";
  for (const auto& [key, count] : counts)
    out << key[0] << ',' << key[1] << ',' << key[2] << ',' << count.get_str() << '\n';
  return out.str();
}

MTable m_bruteforce(int n, int jobs, int limit) {
  if (n > limit)
    throw LimitExceeded("m_bruteforce: n = " + std::to_string(n) + " exceeds limit " +
                        std::to_string(limit));
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  MTable table;
  table.n = n;
  long total = 1;
  for (int i = 2; i <= n; ++i) total *= i;
  if (jobs == 1 || total < jobs) {
    enumerate_factorizations(
        n,
        [&](const FactorTriple& t) {
          table.counts[{t.alpha1.cycle_count(), t.alpha2.cycle_count(),
                        t.alpha3.cycle_count()}] += 1;
        },
        limit);
    return table;
  }
  std::vector<MTable> partial(jobs);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    long begin = total * w / jobs;
    long end = total * (w + 1) / jobs;
    workers.emplace_back([&, w, begin, end] {
      enumerate_factorizations_range(n, begin, end, [&, w](const FactorTriple& t) {
        partial[w].counts[{t.alpha1.cycle_count(), t.alpha2.cycle_count(),
                           t.alpha3.cycle_count()}] += 1;
      });
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& p : partial)
    for (const auto& [key, count] : p.counts) table.counts[key] += count;
  return table;
}

namespace {

// The triple-binomial factor of the closed form (without the N!^2/p! parts).
mpz_class image_sum_factor(int p1, int p2, int p3, int n) {
  mpz_class sum = 0;
  for (int a = 0; a <= n; ++a)
    sum += binomial(n - p2, p1 - 1 - a) * binomial(n - p3, a) * binomial(n - 1 - a, n - p2);
  return binomial(n - 1, p3 - 1) * sum;
}

}  // namespace

mpz_class i_count_formula(int p1, int p2, int p3, int n) {
  if (p1 < 1 || p2 < 1 || p3 < 1) throw std::invalid_argument("block counts must be >= 1");
  mpq_class value(factorial(n) * factorial(n) * image_sum_factor(p1, p2, p3, n),
                  factorial(p1) * factorial(p2) * factorial(p3));
  value.canonicalize();
  if (value.get_den() != 1) throw std::logic_error("i_count_formula: non-integral value");
  return value.get_num();
}

mpz_class cc_count_stirling(int p1, int p2, int p3, int n, const MTable* table, int jobs,
                            int limit) {
  if (p1 < 1 || p2 < 1 || p3 < 1) throw std::invalid_argument("block counts must be >= 1");
  MTable local;
  if (!table) {
    local = m_bruteforce(n, jobs, limit);
    table = &local;
  }
  mpz_class sum = 0;
  for (const auto& [key, count] : table->counts)
    sum += stirling2(key[0], p1) * stirling2(key[1], p2) * stirling2(key[2], p3) * count;
  return sum;
}

mpz_class jackson_symmetric(int p1, int p2, int p3, int n) {
  if (p1 < 1 || p2 < 1 || p3 < 1) throw std::invalid_argument("block counts must be >= 1");
  mpz_class sum = 0;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (int c = 0; c <= n; ++c)
        sum += multinomial(n - 1, {a, b, c, static_cast<long>(p1) - 1 - a - c,
                                   static_cast<long>(p2) - 1 - a - b,
                                   static_cast<long>(p3) - 1 - b - c});
  mpq_class value(factorial(n) * factorial(n) * sum,
                  factorial(p1) * factorial(p2) * factorial(p3));
  value.canonicalize();
  if (value.get_den() != 1) throw std::logic_error("jackson_symmetric: non-integral value");
  return value.get_num();
}

namespace {

std::string monomial_string(const std::vector<int>& exps) {
  std::ostringstream out;
  out << "x1^" << exps[0] << " x2^" << exps[1] << " x3^" << exps[2];
  return out.str();
}

// First coefficient mismatch between two trivariate polynomials, if any.
bool first_mismatch(const TruncatedSeries& lhs, const TruncatedSeries& rhs, std::string& l,
                    std::string& r) {
  std::set<std::vector<int>> keys;
  for (const auto& [e, c] : lhs.terms()) keys.insert(e);
  for (const auto& [e, c] : rhs.terms()) keys.insert(e);
  for (const auto& e : keys) {
    mpq_class cl = lhs.coeff(e), cr = rhs.coeff(e);
    if (cl != cr) {
      l = "[" + monomial_string(e) + "] " + cl.get_str();
      r = "[" + monomial_string(e) + "] " + cr.get_str();
      return true;
    }
  }
  return false;
}

}  // namespace

VerificationReport theorem1_check(int n, int jobs, int limit) {
  VerificationReport report;
  report.check = "theorem1";
  report.n = n;
  report.params = "degree <= " + std::to_string(n) + " per variable";
  MTable mt = m_bruteforce(n, jobs, limit);
  std::vector<int> caps{n, n, n};
  mpq_class norm(1, 1);
  norm /= mpq_class(factorial(n) * factorial(n));

  TruncatedSeries lhs(3, caps), lhs_raw(3, caps);
  for (const auto& [key, count] : mt.counts) {
    std::vector<int> e{key[0], key[1], key[2]};
    lhs.set_coeff(e, mpq_class(count) * norm);
    lhs_raw.set_coeff(e, mpq_class(count));
  }

  TruncatedSeries rhs(3, caps);
  for (int p1 = 1; p1 <= n; ++p1)
    for (int p2 = 1; p2 <= n; ++p2)
      for (int p3 = 1; p3 <= n; ++p3) {
        mpz_class factor = image_sum_factor(p1, p2, p3, n);
        if (factor == 0) continue;
        rhs = rhs + binomial_poly(3, caps, 0, p1) * binomial_poly(3, caps, 1, p2) *
                        binomial_poly(3, caps, 2, p3) * mpq_class(factor);
      }

  std::string l, r;
  if (first_mismatch(lhs, rhs, l, r)) {
    report.pass = false;
    report.lhs = l;
    report.rhs = r;
    return report;
  }

  // Independent bridge: the unnormalized series against the partitioned
  // counts on the falling-factorial basis.
  TruncatedSeries rhs_raw(3, caps);
  for (int p1 = 1; p1 <= n; ++p1)
    for (int p2 = 1; p2 <= n; ++p2)
      for (int p3 = 1; p3 <= n; ++p3) {
        mpz_class cc = cc_count_stirling(p1, p2, p3, n, &mt);
        if (cc == 0) continue;
        rhs_raw = rhs_raw + falling_factorial_poly(3, caps, 0, p1) *
                                falling_factorial_poly(3, caps, 1, p2) *
                                falling_factorial_poly(3, caps, 2, p3) * mpq_class(cc);
      }
  if (first_mismatch(lhs_raw, rhs_raw, l, r)) {
    report.pass = false;
    report.lhs = "(falling-factorial bridge) " + l;
    report.rhs = "(falling-factorial bridge) " + r;
    return report;
  }
  report.pass = true;
  return report;
}

}  // namespace cactus3
