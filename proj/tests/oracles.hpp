// Slow, independent reference computations used only by the tests.
#pragma once

#include "bellgamma/numerics.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using bellgamma::Integer;
using bellgamma::Rat;

std::uint64_t factorial_u64(unsigned n);  // n <= 20
std::vector<Integer> pascal_row(unsigned n);
Integer lcm_pairwise(unsigned n);

/// Fixed-point oracles: round(value * 10^digits).
Integer pi_fixed(unsigned digits);     // 48 atan(1/18) + 32 atan(1/57) - 20 atan(1/239)
Integer gamma_fixed(unsigned digits);  // Brent-McMillan Bessel sums
Integer zeta3_fixed(unsigned digits);  // Apery's central-binomial series
Integer zeta2_fixed(unsigned digits);  // pi^2 / 6

/// Dense polynomial helpers over Q, truncated at `order`.
using Poly = std::vector<Rat>;
Poly poly_mul(const Poly& a, const Poly& b, unsigned order);
/// log(1 + s) as sum_{k>=1} (-1)^{k+1} s^k / k, s(0) = 0.
Poly mercator(const Poly& s, unsigned order);

/// Coefficients c_1..c_order of z(w) solving z = w (1+z)^{1-1/a}, by
/// fixed-point iteration of the truncated series.
std::vector<Rat> reversion_coeffs(unsigned a, unsigned order);

/// Bell numbers B_0..B_n through Stirling numbers of the second kind.
std::vector<Integer> bell_numbers(unsigned n);

}  // namespace oracle
