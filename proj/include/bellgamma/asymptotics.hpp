// Exponent coefficients b_m(a), the growth/decay exponents built from them,
// and the saddle-point roots tau_k(u).
#pragma once

#include "bellgamma/numerics.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace bellgamma {

/// b_1(a)..b_a(a): the coefficients of z^m in
///   -a log(1 + sum_{m=1}^a (2-(m+1)/a)_m/(m+1)! z^m) - sum_{m=1}^a (2-m/a)_{m-1}/m! z^m.
std::vector<Rat> bm_coeffs(unsigned a);

enum class ExponentKind { LinearForm, Qn, Decay };

std::string to_string(ExponentKind k);

/// Coefficients of n^{1-m/a} in one of the exponents. `coefficients` is exact
/// whenever every cosine involved is rational (a in {2, 3, 4, 6}, or the q_n
/// exponent for any a); otherwise it is empty and only the doubles are set.
struct ExponentProfile {
  unsigned a = 0;
  ExponentKind kind = ExponentKind::Decay;
  std::vector<Rat> b;
  std::optional<std::vector<Rat>> coefficients;
  std::vector<double> numeric_coefficients;
};

ExponentProfile exponent_profile(unsigned a, ExponentKind kind);

/// {"a":..., "kind":..., "b":["-3","-1","-1/3"], ...}
nlohmann::json to_json(const ExponentProfile& p);

/// cos(2 pi m / a) when it is rational.
std::optional<Rat> rational_cos_2pi(long m, long a);

/// sum_{m=1}^{a-1} (-1)^m b_m(a) cos(2 pi m/a) n^{1-m/a}.
double linform_exponent(unsigned a, double n);

/// sum_{m=1}^{a-1} (-1)^m b_m(a) (cos(2 pi m/a) - 1) n^{1-m/a}.
double corollary_exponent(unsigned a, double n);

/// Natural log of the leading asymptotic term of q_n:
///   n! / (sqrt(a) (2 pi)^{(a-1)/2} n^{(a-1)^2/(2a)}) exp(sum_{m=1}^a (-1)^m b_m(a) n^{1-m/a}),
/// with log n! summed exactly term by term. Requires n >= 1.
double qn_log_asymptotic(unsigned a, unsigned n);

/// Power of n in the denominator of the q_n asymptotic term, (a-1)^2 / (2a).
Rat qn_power(unsigned a);

/// (2 - m/a)_{m-1} / m!, the coefficients of the root expansion.
Rat lagrange_coeff(unsigned a, unsigned m);

struct CPoint {
  double re = 0;
  double im = 0;
  std::complex<double> value() const { return {re, im}; }
};

struct SaddleRoot {
  unsigned k = 0;
  CPoint seed;
  CPoint root;
  double residual_over_n = 0;  ///< |p_u(root)| / n
  unsigned iterations = 0;
};

class NewtonFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kMinSaddleN = 1e3;

/// p_u(tau) = e^{i pi u} n (tau-1)^a - tau^{a-1}.
std::complex<double> saddle_polynomial(unsigned a, int u, double n, std::complex<double> tau);

/// Seed 1 + sum_{m=1}^{terms} c_m e^{i m (2 pi k - pi u)/a} n^{-m/a}.
std::complex<double> saddle_seed(unsigned a, int u, double n, unsigned k, unsigned terms = 3);

/// All a roots of p_u, each refined by Newton's method from saddle_seed until
/// |p_u| < 1e-10 n. Requires n >= 1e3 and |u| <= a. Throws NewtonFailure if a
/// root has not converged after 100 iterations.
std::vector<SaddleRoot> saddle_roots(unsigned a, int u, double n);

}  // namespace bellgamma
