// Univariate polynomials over Q.
#pragma once

#include "bellgamma/numerics.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace bellgamma {

/// Coefficients in ascending degree, trailing zeros trimmed (zero polynomial
/// has no coefficients).
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rat> coeffs);
  PolyQ(std::initializer_list<long> coeffs);

  static PolyQ constant(const Rat& c);
  static PolyQ x();
  /// (x - r_1)(x - r_2)...
  static PolyQ from_roots(const std::vector<Rat>& roots);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

  Rat operator()(const Rat& x) const;
  std::string to_string(char var = 'x') const;

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const Rat& c);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(PolyQ a, const Rat& c) { return a *= c; }
  friend bool operator==(const PolyQ&, const PolyQ&) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

}  // namespace bellgamma
