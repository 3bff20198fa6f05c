#include "bellgamma/bigfix.hpp"

#include <cmath>
#include <numbers>

namespace bellgamma {

Integer pow10(unsigned e) { return ipow(Integer(10), e); }

Integer div_round(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("div_round: division by zero");
  Integer n = ::abs(num);
  Integer d = ::abs(den);
  Integer q = (2 * n + d) / (2 * d);
  return (sgn(num) * sgn(den) < 0) ? Integer(-q) : q;
}

BigFix BigFix::from_integer(const Integer& v, unsigned scale) {
  return BigFix(v * pow10(scale), scale);
}

BigFix BigFix::from_rat(const Rat& v, unsigned scale) {
  return BigFix(div_round(v.get_num() * pow10(scale), v.get_den()), scale);
}

BigFix BigFix::parse(std::string_view text) {
  std::string digits;
  bool negative = false;
  unsigned frac = 0;
  bool seen_point = false;
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    i = 1;
  }
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac;
    } else {
      throw std::invalid_argument("BigFix::parse: bad character in '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("BigFix::parse: no digits");
  Integer m(digits, 10);
  return BigFix(negative ? Integer(-m) : m, frac);
}

BigFix BigFix::parse(std::string_view text, unsigned scale) { return parse(text).rescaled(scale); }

BigFix BigFix::rescaled(unsigned new_scale) const {
  if (new_scale >= scale_) return BigFix(mantissa_ * pow10(new_scale - scale_), new_scale);
  return BigFix(div_round(mantissa_, pow10(scale_ - new_scale)), new_scale);
}

BigFix BigFix::pow(unsigned e) const {
  BigFix r = from_integer(1, scale_);
  BigFix base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

Rat BigFix::to_rat() const { return make_rat(mantissa_, pow10(scale_)); }

double BigFix::log_abs_double() const {
  if (mantissa_ == 0) return -HUGE_VAL;
  long exp2 = 0;
  double d = mpz_get_d_2exp(&exp2, mantissa_.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(exp2) * std::numbers::ln2 -
         static_cast<double>(scale_) * std::numbers::ln10;
}

double BigFix::to_double() const {
  if (mantissa_ == 0) return 0.0;
  return to_rat().get_d();
}

std::string BigFix::to_string() const {
  std::string s = Integer(::abs(mantissa_)).get_str();
  if (scale_ > 0) {
    if (s.size() <= scale_) s.insert(0, scale_ - s.size() + 1, '0');
    s.insert(s.size() - scale_, ".");
  }
  if (mantissa_ < 0) s.insert(0, "-");
  return s;
}

void BigFix::require_same_scale(const BigFix& o) const {
  if (o.scale_ != scale_) throw std::invalid_argument("BigFix: scale mismatch");
}

BigFix& BigFix::operator+=(const BigFix& o) {
  require_same_scale(o);
  mantissa_ += o.mantissa_;
  return *this;
}

BigFix& BigFix::operator-=(const BigFix& o) {
  require_same_scale(o);
  mantissa_ -= o.mantissa_;
  return *this;
}

BigFix& BigFix::operator*=(const BigFix& o) {
  require_same_scale(o);
  mantissa_ = div_round(mantissa_ * o.mantissa_, pow10(scale_));
  return *this;
}

BigFix& BigFix::operator/=(const BigFix& o) {
  require_same_scale(o);
  if (o.mantissa_ == 0) throw std::domain_error("BigFix: division by zero");
  mantissa_ = div_round(mantissa_ * pow10(scale_), o.mantissa_);
  return *this;
}

BigFix& BigFix::operator*=(const Integer& k) {
  mantissa_ *= k;
  return *this;
}

BigFix& BigFix::operator/=(const Integer& k) {
  mantissa_ = div_round(mantissa_, k);
  return *this;
}

std::strong_ordering operator<=>(const BigFix& a, const BigFix& b) {
  int c;
  if (a.scale_ == b.scale_) {
    c = cmp(a.mantissa_, b.mantissa_);
  } else if (a.scale_ < b.scale_) {
    c = cmp(Integer(a.mantissa_ * pow10(b.scale_ - a.scale_)), b.mantissa_);
  } else {
    c = cmp(a.mantissa_, Integer(b.mantissa_ * pow10(a.scale_ - b.scale_)));
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

namespace {

// 2 atanh(t) = ln((1+t)/(1-t)) for |t| < 1, summed until terms vanish at t's scale.
BigFix two_atanh(const BigFix& t) {
  BigFix t2 = t * t;
  BigFix power = t;
  BigFix sum = t;
  for (unsigned long k = 1; !power.is_zero(); ++k) {
    power *= t2;
    sum += power / Integer(2 * k + 1);
  }
  sum *= Integer(2);
  return sum;
}

BigFix ln2_at(unsigned scale) {
  return two_atanh(BigFix::from_rat(make_rat(1, 3), scale));
}

}  // namespace

BigFix ln(const BigFix& x) {
  if (x.sign() <= 0) throw std::domain_error("ln: argument must be positive");
  const unsigned s = x.scale();
  const unsigned w = s + 12;
  BigFix y = x.rescaled(w);
  // x = y_reduced * 2^e with y_reduced near 1
  const long e = std::lround(x.log_abs_double() / std::numbers::ln2);
  if (e > 0) {
    y /= ipow(Integer(2), static_cast<unsigned long>(e));
  } else if (e < 0) {
    // exact when growing
    y *= ipow(Integer(2), static_cast<unsigned long>(-e));
  }
  const BigFix one = BigFix::from_integer(1, w);
  BigFix t = (y - one) / (y + one);
  BigFix r = two_atanh(t) + ln2_at(w) * Integer(e);
  return r.rescaled(s);
}

}  // namespace bellgamma
