// Fixed-point decimal reals: value = mantissa * 10^(-scale).
#pragma once

#include "bellgamma/numerics.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bellgamma {

/// Raised when two computations at different guard precisions disagree on
/// the digits they are supposed to certify.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decimal fixed-point number. Binary operations require both operands to
/// carry the same scale; results are rounded to nearest (ties away from zero).
class BigFix {
 public:
  BigFix() = default;
  BigFix(Integer mantissa, unsigned scale) : mantissa_(std::move(mantissa)), scale_(scale) {}

  static BigFix from_integer(const Integer& v, unsigned scale);
  static BigFix from_rat(const Rat& v, unsigned scale);
  /// Parses "[-]ddd[.ddd]"; the scale is the number of fractional digits
  /// unless `scale` is given, in which case the value is rounded to it.
  static BigFix parse(std::string_view text);
  static BigFix parse(std::string_view text, unsigned scale);

  const Integer& mantissa() const { return mantissa_; }
  unsigned scale() const { return scale_; }
  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return mantissa_ == 0; }

  BigFix rescaled(unsigned new_scale) const;
  BigFix abs() const { return BigFix(::abs(mantissa_), scale_); }
  BigFix pow(unsigned e) const;
  Rat to_rat() const;
  double to_double() const;
  /// Natural log of |x| in double precision, valid far below DBL_MIN.
  double log_abs_double() const;
  std::string to_string() const;

  BigFix operator-() const { return BigFix(-mantissa_, scale_); }
  BigFix& operator+=(const BigFix& o);
  BigFix& operator-=(const BigFix& o);
  BigFix& operator*=(const BigFix& o);
  BigFix& operator/=(const BigFix& o);
  BigFix& operator*=(const Integer& k);
  BigFix& operator/=(const Integer& k);

  friend BigFix operator+(BigFix a, const BigFix& b) { return a += b; }
  friend BigFix operator-(BigFix a, const BigFix& b) { return a -= b; }
  friend BigFix operator*(BigFix a, const BigFix& b) { return a *= b; }
  friend BigFix operator/(BigFix a, const BigFix& b) { return a /= b; }
  friend BigFix operator*(BigFix a, const Integer& k) { return a *= k; }
  friend BigFix operator/(BigFix a, const Integer& k) { return a /= k; }

  /// Value comparison; scales may differ.
  friend std::strong_ordering operator<=>(const BigFix& a, const BigFix& b);
  friend bool operator==(const BigFix& a, const BigFix& b) { return (a <=> b) == 0; }

 private:
  void require_same_scale(const BigFix& o) const;

  Integer mantissa_ = 0;
  unsigned scale_ = 0;
};

/// 10^e as an integer.
Integer pow10(unsigned e);

/// round(num / den) with ties away from zero; den != 0.
Integer div_round(const Integer& num, const Integer& den);

/// ln(x) for x > 0 at x's scale, via binary argument reduction and the atanh series.
BigFix ln(const BigFix& x);

/// pi by Machin's formula, `digits` decimal places.
BigFix pi_const(unsigned digits);

/// Euler's constant to `digits` decimal places (digits <= 10000), computed by
/// Euler-Maclaurin summation of H_N - ln N with the remainder bounded by the
/// first omitted term, certified by agreement of two guard precisions.
BigFix gamma_const(unsigned digits);

/// zeta(m), m >= 2, to `digits` decimal places by Euler-Maclaurin tail
/// summation; certified the same way as gamma_const.
BigFix zeta_const(unsigned m, unsigned digits);

inline constexpr unsigned kMaxConstantDigits = 10000;

}  // namespace bellgamma
