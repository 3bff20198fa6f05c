// Exact integer and rational primitives shared by every other module.
#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

namespace bellgamma {

using Integer = mpz_class;
/// Arbitrary-precision rational. gmpxx keeps results canonical (positive
/// denominator, coprime parts) after every arithmetic operation; values built
/// from a raw numerator/denominator pair must go through make_rat.
using Rat = mpq_class;

/// Canonical num/den. Throws std::domain_error when den == 0.
Rat make_rat(const Integer& num, const Integer& den);
Rat make_rat(long num, long den);

bool is_integer(const Rat& x);

Integer factorial(unsigned long n);

/// Throws std::invalid_argument when k > n.
Integer binom(unsigned long n, unsigned long k);

/// D_n = lcm(1, ..., n); D_0 = 1.
Integer lcm_upto(unsigned long n);

/// Rising factorial (x)_m = x (x+1) ... (x+m-1), (x)_0 = 1.
Rat poch(const Rat& x, unsigned long m);

Integer ipow(const Integer& base, unsigned long e);
Rat ipow(const Rat& base, unsigned long e);

/// ln |x| in double precision without overflow; x must be nonzero.
double log_abs(const Integer& x);
double log_abs(const Rat& x);

/// Classical Bernoulli numbers B_0..B_n with B_1 = -1/2.
std::vector<Rat> bernoulli_numbers(unsigned n);

}  // namespace bellgamma
