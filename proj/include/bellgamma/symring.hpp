// Sparse polynomials over Q in the formal symbols g (Euler's constant) and
// z2..zM (zeta values).
#pragma once

#include "bellgamma/bigfix.hpp"
#include "bellgamma/numerics.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace bellgamma {

/// Polynomial in g, z2, ..., zM. An exponent vector has M entries: index 0 is
/// the exponent of g, index m-1 the exponent of z_m. Zero coefficients are
/// never stored.
class SymPoly {
 public:
  using Exponents = std::vector<unsigned>;

  /// Zero polynomial with symbols up to z_M; max_zeta >= 1 (1 means "g only").
  explicit SymPoly(unsigned max_zeta);

  static SymPoly constant(unsigned max_zeta, const Rat& c);
  static SymPoly gamma_symbol(unsigned max_zeta);
  /// z_m, 2 <= m <= max_zeta.
  static SymPoly zeta_symbol(unsigned max_zeta, unsigned m);

  unsigned max_zeta() const { return max_zeta_; }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat coefficient(const Exponents& e) const;
  Rat constant_term() const;
  unsigned degree_in_gamma() const;
  /// Coefficients are all integers.
  bool is_integral() const;

  /// Renders e.g. "g^2 + 5*z2" or "-11*g + 13/2"; the zero polynomial is "0".
  std::string to_string() const;

  SymPoly operator-() const;
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const SymPoly& o);
  SymPoly& operator*=(const Rat& c);

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(SymPoly a, const Rat& c) { return a *= c; }
  friend SymPoly operator*(SymPoly a, const Integer& c) { return a *= Rat(c); }
  friend bool operator==(const SymPoly& a, const SymPoly& b) = default;

 private:
  void require_same_ring(const SymPoly& o) const;
  void add_term(const Exponents& e, const Rat& c);

  unsigned max_zeta_;
  std::map<Exponents, Rat> terms_;
};

SymPoly sp_add(const SymPoly& p, const SymPoly& q);
SymPoly sp_mul(const SymPoly& p, const SymPoly& q);

/// Numeric substitution g -> gamma_val, z_m -> zeta_vals[m-2]; all inputs
/// share one scale, which is also the scale of the result. Throws
/// std::invalid_argument when a needed zeta value is missing.
BigFix sp_eval(const SymPoly& p, const BigFix& gamma_val, std::span<const BigFix> zeta_vals);

/// The Bell arguments x_1 = g, x_m = (m-1)! (a + (-1)^m (a-1)) z_m, m = 1..count.
std::vector<SymPoly> alpha_arguments(unsigned a, unsigned count, unsigned max_zeta);

/// alpha_mu = Y_mu(alpha_arguments), in the ring with max_zeta = a-1.
SymPoly alpha_mu(unsigned a, unsigned mu);

/// lambda_{mu,nu} = binom(mu,nu) Y_{mu-nu}(alpha_arguments), 1 <= nu <= mu <= a-1.
SymPoly lambda_coeff(unsigned a, unsigned mu, unsigned nu);

/// Number of zeta symbols used for a given a: max(a-1, 1).
inline unsigned symbol_count(unsigned a) { return a > 2 ? a - 1 : 1; }

}  // namespace bellgamma
