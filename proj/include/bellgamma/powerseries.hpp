// Dense truncated power series with exact rational coefficients.
#pragma once

#include "bellgamma/numerics.hpp"

#include <vector>

namespace bellgamma {

/// c_0 + c_1 z + ... + c_N z^N + O(z^(N+1)). Binary operations need equal orders.
class SeriesQ {
 public:
  explicit SeriesQ(unsigned order) : coeffs_(order + 1) {}
  /// Pads with zeros or truncates to order + 1 coefficients.
  SeriesQ(std::vector<Rat> coeffs, unsigned order);

  static SeriesQ constant(const Rat& c, unsigned order);
  /// The series z.
  static SeriesQ variable(unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
  Rat& operator[](std::size_t i) { return coeffs_[i]; }

  SeriesQ& operator+=(const SeriesQ& o);
  SeriesQ& operator-=(const SeriesQ& o);
  SeriesQ& operator*=(const Rat& c);
  friend SeriesQ operator+(SeriesQ a, const SeriesQ& b) { return a += b; }
  friend SeriesQ operator-(SeriesQ a, const SeriesQ& b) { return a -= b; }
  friend SeriesQ operator*(SeriesQ a, const Rat& c) { return a *= c; }
  friend bool operator==(const SeriesQ&, const SeriesQ&) = default;

 private:
  std::vector<Rat> coeffs_;
};

/// Truncated Cauchy product.
SeriesQ ps_mul(const SeriesQ& s, const SeriesQ& t);
/// s^k, s^0 = 1.
SeriesQ ps_pow(const SeriesQ& s, unsigned k);
/// 1/s; throws std::domain_error when s(0) == 0.
SeriesQ ps_recip(const SeriesQ& s);
/// exp(s); throws std::domain_error when s(0) != 0.
SeriesQ ps_exp(const SeriesQ& s);
/// log(1 + s); throws std::domain_error when s(0) != 0.
SeriesQ ps_log1p(const SeriesQ& s);

}  // namespace bellgamma
