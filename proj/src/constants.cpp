// Reference values of pi, Euler's constant and zeta(m).
#include "bellgamma/bigfix.hpp"

#include <string>

namespace bellgamma {

namespace {

void check_digits(unsigned digits) {
  if (digits == 0 || digits > kMaxConstantDigits)
    throw std::out_of_range("requested precision must be in 1.." + std::to_string(kMaxConstantDigits) +
                            " digits, got " + std::to_string(digits));
}

unsigned guard_for(unsigned long terms) {
  return 10 + static_cast<unsigned>(std::to_string(terms).size());
}

// Grows a table of Bernoulli numbers on demand.
class BernoulliTable {
 public:
  const Rat& operator[](unsigned i) {
    if (i >= table_.size()) table_ = bernoulli_numbers(std::max<unsigned>(2 * i, 64));
    return table_[i];
  }

 private:
  std::vector<Rat> table_;
};

// sum_{k>=0} (-1)^k / ((2k+1) x^(2k+1))
BigFix atan_inv(unsigned long x, unsigned scale) {
  const Integer xx = Integer(x) * Integer(x);
  Integer power = div_round(pow10(scale), Integer(x));
  Integer sum = power;
  for (unsigned long k = 1; power != 0; ++k) {
    power = div_round(power, xx);
    Integer term = div_round(power, Integer(2 * k + 1));
    if (k % 2 == 1) sum -= term; else sum += term;
  }
  return BigFix(sum, scale);
}

BigFix pi_at(unsigned scale) {
  const unsigned w = scale + 10;
  BigFix r = atan_inv(5, w) * Integer(16) - atan_inv(239, w) * Integer(4);
  return r.rescaled(scale);
}

BigFix gamma_at(unsigned scale) {
  const unsigned long n = scale + 10;
  const unsigned p = scale + guard_for(n);
  const Integer unit = pow10(p);

  Integer h = 0;
  for (unsigned long k = 1; k <= n; ++k) h += div_round(unit, Integer(k));
  BigFix acc(h, p);
  acc -= ln(BigFix::from_integer(Integer(n), p));
  acc -= BigFix(div_round(unit, Integer(2 * n)), p);

  // + sum_k B_2k / (2k N^2k); the remainder is bounded by the first omitted term.
  const BigFix tolerance(1, p);
  BernoulliTable bern;
  const Integer nn = Integer(n) * Integer(n);
  Integer npow = 1;
  for (unsigned k = 1;; ++k) {
    npow *= nn;
    Rat term = bern[2 * k] / (Rat(2 * k) * Rat(npow));
    BigFix t = BigFix::from_rat(term, p);
    if (t.abs() < tolerance) break;
    acc += t;
  }
  return acc.rescaled(scale);
}

BigFix zeta_at(unsigned m, unsigned scale) {
  const unsigned long n = scale + 10;
  const unsigned p = scale + guard_for(n);
  const Integer unit = pow10(p);

  Integer head = 0;
  for (unsigned long k = 1; k < n; ++k) head += div_round(unit, ipow(Integer(k), m));
  BigFix acc(head, p);
  // tail sum_{k>=N} k^-m = N^(1-m)/(m-1) + N^-m/2 + sum_j B_2j/(2j)! (m)_{2j-1} N^(-m-2j+1) + R
  const Integer nm = ipow(Integer(n), m);
  acc += BigFix::from_rat(make_rat(Integer(n), nm * (m - 1)), p);
  acc += BigFix::from_rat(make_rat(Integer(1), nm * 2), p);

  const BigFix tolerance(1, p);
  BernoulliTable bern;
  Integer npow = nm / n;
  for (unsigned j = 1;; ++j) {
    npow *= Integer(n) * Integer(n);
    Rat term = bern[2 * j] / Rat(factorial(2 * j)) * poch(Rat(m), 2 * j - 1) / Rat(npow);
    BigFix t = BigFix::from_rat(term, p);
    if (t.abs() < tolerance) break;
    acc += t;
  }
  return acc.rescaled(scale);
}

template <class Compute>
BigFix certified(unsigned digits, Compute compute, const char* what) {
  BigFix lo = compute(digits + 10).rescaled(digits);
  BigFix hi = compute(digits + 20).rescaled(digits);
  if (lo != hi)
    throw PrecisionError(std::string(what) + ": guard-digit runs disagree at " + std::to_string(digits) +
                         " digits");
  return lo;
}

}  // namespace

BigFix pi_const(unsigned digits) {
  check_digits(digits);
  return certified(digits, pi_at, "pi");
}

BigFix gamma_const(unsigned digits) {
  check_digits(digits);
  return certified(digits, gamma_at, "gamma");
}

BigFix zeta_const(unsigned m, unsigned digits) {
  if (m < 2) throw std::domain_error("zeta_const: m must be >= 2");
  check_digits(digits);
  return certified(digits, [m](unsigned s) { return zeta_at(m, s); }, "zeta");
}

}  // namespace bellgamma
