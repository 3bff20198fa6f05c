// Generalized Bernoulli polynomials B_n^(m)(x), defined by
//   z^m e^{xz} / (e^z - 1)^m = sum_n B_n^(m)(x) z^n / n!.
#pragma once

#include "bellgamma/numerics.hpp"
#include "bellgamma/polyq.hpp"

#include <vector>

namespace bellgamma {

inline constexpr unsigned kMaxBernoulliIndex = 200;
inline constexpr unsigned kMaxBernoulliOrder = 50;
inline constexpr unsigned kMaxCscTerms = 50;

/// B_n^(m)(x) as an exact polynomial in x, read off the truncated generating
/// series. Requires n <= 200 and 1 <= m <= 50.
PolyQ gen_bernoulli(unsigned n, unsigned m);

/// All of B_0^(m)..B_n^(m) from one series expansion.
std::vector<PolyQ> gen_bernoulli_all(unsigned n, unsigned m);

Rat bernoulli_at(unsigned n, unsigned m, const Rat& x);

/// Coefficients of z^{2k}, k = 0..N, in (z / sin z)^m from
///   (-1)^k 4^k B_{2k}^(m)(m/2) / (2k)!.
/// The values are checked against direct inversion of (sin z / z)^m and a
/// std::logic_error is thrown if the two disagree.
std::vector<Rat> csc_power_coeffs(unsigned m, unsigned N);

/// Same coefficients, by series inversion only.
std::vector<Rat> csc_power_coeffs_direct(unsigned m, unsigned N);

}  // namespace bellgamma
