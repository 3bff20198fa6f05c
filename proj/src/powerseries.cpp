#include "bellgamma/powerseries.hpp"

#include <stdexcept>

namespace bellgamma {

namespace {

void require_same_order(const SeriesQ& a, const SeriesQ& b) {
  if (a.order() != b.order()) throw std::invalid_argument("SeriesQ: order mismatch");
}

}  // namespace

SeriesQ::SeriesQ(std::vector<Rat> coeffs, unsigned order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

SeriesQ SeriesQ::constant(const Rat& c, unsigned order) {
  SeriesQ s(order);
  s[0] = c;
  return s;
}

SeriesQ SeriesQ::variable(unsigned order) {
  SeriesQ s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

SeriesQ& SeriesQ::operator+=(const SeriesQ& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

SeriesQ& SeriesQ::operator-=(const SeriesQ& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

SeriesQ& SeriesQ::operator*=(const Rat& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

SeriesQ ps_mul(const SeriesQ& s, const SeriesQ& t) {
  require_same_order(s, t);
  const unsigned n = s.order();
  SeriesQ r(n);
  for (unsigned i = 0; i <= n; ++i) {
    if (s[i] == 0) continue;
    for (unsigned j = 0; i + j <= n; ++j) r[i + j] += s[i] * t[j];
  }
  return r;
}

SeriesQ ps_pow(const SeriesQ& s, unsigned k) {
  SeriesQ r = SeriesQ::constant(1, s.order());
  SeriesQ base = s;
  while (k > 0) {
    if (k & 1u) r = ps_mul(r, base);
    k >>= 1;
    if (k > 0) base = ps_mul(base, base);
  }
  return r;
}

SeriesQ ps_recip(const SeriesQ& s) {
  if (s[0] == 0) throw std::domain_error("ps_recip: constant term is zero");
  const unsigned n = s.order();
  SeriesQ r(n);
  const Rat inv0 = 1 / s[0];
  r[0] = inv0;
  for (unsigned k = 1; k <= n; ++k) {
    Rat acc = 0;
    for (unsigned j = 1; j <= k; ++j) acc += s[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return r;
}

SeriesQ ps_exp(const SeriesQ& s) {
  if (s[0] != 0) throw std::domain_error("ps_exp: constant term must be zero");
  const unsigned n = s.order();
  // e' = e s'  =>  k e_k = sum_{j=1}^{k} j s_j e_{k-j}
  SeriesQ e(n);
  e[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    Rat acc = 0;
    for (unsigned j = 1; j <= k; ++j) acc += Rat(j) * s[j] * e[k - j];
    e[k] = acc / Rat(k);
  }
  return e;
}

SeriesQ ps_log1p(const SeriesQ& s) {
  if (s[0] != 0) throw std::domain_error("ps_log1p: constant term must be zero");
  const unsigned n = s.order();
  // L' (1 + s) = s'  =>  k L_k = k s_k - sum_{j=1}^{k-1} j L_j s_{k-j}
  SeriesQ l(n);
  for (unsigned k = 1; k <= n; ++k) {
    Rat acc = Rat(k) * s[k];
    for (unsigned j = 1; j < k; ++j) acc -= Rat(j) * l[j] * s[k - j];
    l[k] = acc / Rat(k);
  }
  return l;
}

}  // namespace bellgamma
