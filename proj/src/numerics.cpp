#include "bellgamma/numerics.hpp"

#include "bellgamma/bell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bellgamma {

Rat make_rat(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Integer(num), Integer(den)); }

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binom(unsigned long n, unsigned long k) {
  if (k > n) throw std::invalid_argument("binom: k > n");
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer lcm_upto(unsigned long n) {
  Integer r = 1;
  for (unsigned long k = 2; k <= n; ++k) {
    Integer kk(k);
    mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), kk.get_mpz_t());
  }
  return r;
}

Rat poch(const Rat& x, unsigned long m) {
  Rat r = 1;
  for (unsigned long i = 0; i < m; ++i) r *= x + Rat(i);
  return r;
}

double log_abs(const Integer& x) {
  if (x == 0) throw std::domain_error("log_abs: zero");
  long e = 0;
  const double m = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::numbers::ln2;
}

double log_abs(const Rat& x) {
  return log_abs(Integer(x.get_num())) - log_abs(Integer(x.get_den()));
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat ipow(const Rat& base, unsigned long e) {
  return make_rat(ipow(base.get_num(), e), ipow(base.get_den(), e));
}

std::vector<Rat> bernoulli_numbers(unsigned n) {
  // sum_{j=0}^{m} binom(m+1, j) B_j = 0 for m >= 1
  std::vector<Rat> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    if (m > 1 && m % 2 == 1) {
      b[m] = 0;
      continue;
    }
    Rat s = 0;
    for (unsigned j = 0; j < m; ++j) s += Rat(binom(m + 1, j)) * b[j];
    b[m] = -s / Rat(m + 1);
  }
  return b;
}

Integer partition_multinomial(std::span<const unsigned> k, unsigned n) {
  unsigned long weight = 0;
  Integer den = 1;
  for (std::size_t j = 0; j < k.size(); ++j) {
    weight += (j + 1) * static_cast<unsigned long>(k[j]);
    den *= ipow(factorial(j + 1), k[j]) * factorial(k[j]);
  }
  if (weight != n) throw std::invalid_argument("partition_multinomial: sum j*k_j != n");
  Integer num = factorial(n);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::domain_error("partition_multinomial: quotient is not an integer");
  return num / den;
}

}  // namespace bellgamma
