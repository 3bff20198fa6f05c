#include "bellgamma/bernoulli.hpp"

#include "bellgamma/powerseries.hpp"

#include <stdexcept>

namespace bellgamma {

PolyQ::PolyQ(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ::PolyQ(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

PolyQ PolyQ::constant(const Rat& c) { return PolyQ(std::vector<Rat>{c}); }

PolyQ PolyQ::x() { return PolyQ(std::vector<Rat>{Rat(0), Rat(1)}); }

PolyQ PolyQ::from_roots(const std::vector<Rat>& roots) {
  PolyQ p = constant(1);
  for (const Rat& r : roots) p = p * PolyQ(std::vector<Rat>{Rat(-r), Rat(1)});
  return p;
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat PolyQ::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string PolyQ::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat mag = ::abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(i));
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rat& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  std::vector<Rat> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyQ(std::move(r));
}

namespace {

void check_bernoulli_range(unsigned n, unsigned m) {
  if (n > kMaxBernoulliIndex) throw std::out_of_range("gen_bernoulli: n > 200");
  if (m < 1 || m > kMaxBernoulliOrder) throw std::out_of_range("gen_bernoulli: m outside 1..50");
}

// (z / (e^z - 1))^m to order n
SeriesQ bernoulli_kernel(unsigned n, unsigned m) {
  SeriesQ e(n);  // (e^z - 1)/z
  Integer f = 1;
  for (unsigned j = 0; j <= n; ++j) {
    f *= j + 1;
    e[j] = make_rat(Integer(1), f);
  }
  return ps_pow(ps_recip(e), m);
}

PolyQ extract(const SeriesQ& kernel, unsigned n) {
  // n! [z^n] kernel(z) e^{xz} = sum_i n!/i! kernel_{n-i} x^i
  std::vector<Rat> c(n + 1);
  const Integer nf = factorial(n);
  for (unsigned i = 0; i <= n; ++i) c[i] = kernel[n - i] * Rat(nf / factorial(i));
  return PolyQ(std::move(c));
}

}  // namespace

PolyQ gen_bernoulli(unsigned n, unsigned m) {
  check_bernoulli_range(n, m);
  return extract(bernoulli_kernel(n, m), n);
}

std::vector<PolyQ> gen_bernoulli_all(unsigned n, unsigned m) {
  check_bernoulli_range(n, m);
  SeriesQ kernel = bernoulli_kernel(n, m);
  std::vector<PolyQ> out;
  out.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) out.push_back(extract(kernel, k));
  return out;
}

Rat bernoulli_at(unsigned n, unsigned m, const Rat& x) { return gen_bernoulli(n, m)(x); }

std::vector<Rat> csc_power_coeffs_direct(unsigned m, unsigned N) {
  if (N > kMaxCscTerms) throw std::out_of_range("csc_power_coeffs: N > 50");
  const unsigned order = 2 * N;
  SeriesQ s(order);  // sin z / z
  Integer f = 1;
  for (unsigned j = 0; 2 * j <= order; ++j) {
    if (j > 0) f *= Integer(2 * j) * Integer(2 * j + 1);
    s[2 * j] = make_rat(Integer(j % 2 == 0 ? 1 : -1), f);
  }
  SeriesQ inv = ps_pow(ps_recip(s), m);
  std::vector<Rat> out(N + 1);
  for (unsigned k = 0; k <= N; ++k) out[k] = inv[2 * k];
  return out;
}

std::vector<Rat> csc_power_coeffs(unsigned m, unsigned N) {
  if (N > kMaxCscTerms) throw std::out_of_range("csc_power_coeffs: N > 50");
  const std::vector<PolyQ> b = gen_bernoulli_all(2 * N, m);
  const Rat half_m = make_rat(m, 2);
  std::vector<Rat> out(N + 1);
  for (unsigned k = 0; k <= N; ++k) {
    Rat v = b[2 * k](half_m) * Rat(ipow(Integer(4), k)) / Rat(factorial(2 * k));
    out[k] = (k % 2 == 0) ? v : Rat(-v);
  }
  if (out != csc_power_coeffs_direct(m, N))
    throw std::logic_error("csc_power_coeffs: Bernoulli formula disagrees with series inversion");
  return out;
}

}  // namespace bellgamma
