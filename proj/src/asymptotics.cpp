#include "bellgamma/asymptotics.hpp"

#include "bellgamma/powerseries.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace bellgamma {

namespace {

void check_a(unsigned a) {
  if (a < 2) throw std::out_of_range("a must be >= 2");
}

double to_double(const Rat& r) { return r.get_d(); }

}  // namespace

std::vector<Rat> bm_coeffs(unsigned a) {
  check_a(a);
  const Rat ra(a);
  SeriesQ inner(a);
  for (unsigned m = 1; m <= a; ++m)
    inner[m] = poch(Rat(2) - Rat(m + 1) / ra, m) / Rat(factorial(m + 1));
  SeriesQ total = ps_log1p(inner) * Rat(-ra);
  for (unsigned m = 1; m <= a; ++m) total[m] -= poch(Rat(2) - Rat(m) / ra, m - 1) / Rat(factorial(m));
  return std::vector<Rat>(total.coeffs().begin() + 1, total.coeffs().end());
}

std::string to_string(ExponentKind k) {
  switch (k) {
    case ExponentKind::LinearForm: return "theorem-linear-form";
    case ExponentKind::Qn: return "theorem-qn";
    case ExponentKind::Decay: return "corollary";
  }
  return "unknown";
}

std::optional<Rat> rational_cos_2pi(long m, long a) {
  if (a <= 0) throw std::invalid_argument("rational_cos_2pi: a must be positive");
  // reduce m/a to r/12 when possible
  long r = ((m % a) + a) % a;
  if ((12 * r) % a != 0) return std::nullopt;
  switch ((12 * r) / a) {
    case 0: return Rat(1);
    case 2: case 10: return make_rat(1, 2);
    case 3: case 9: return Rat(0);
    case 4: case 8: return make_rat(-1, 2);
    case 6: return Rat(-1);
    default: return std::nullopt;
  }
}

ExponentProfile exponent_profile(unsigned a, ExponentKind kind) {
  ExponentProfile p;
  p.a = a;
  p.kind = kind;
  p.b = bm_coeffs(a);
  const unsigned terms = kind == ExponentKind::Qn ? a : a - 1;
  std::vector<Rat> exact;
  bool rational = true;
  for (unsigned m = 1; m <= terms; ++m) {
    const Rat signed_b = (m % 2 == 0) ? p.b[m - 1] : Rat(-p.b[m - 1]);
    const double angle = 2 * std::numbers::pi * m / a;
    double factor = 1;
    std::optional<Rat> exact_factor = Rat(1);
    if (kind == ExponentKind::LinearForm) {
      factor = std::cos(angle);
      exact_factor = rational_cos_2pi(m, a);
    } else if (kind == ExponentKind::Decay) {
      factor = std::cos(angle) - 1;
      exact_factor = rational_cos_2pi(m, a);
      if (exact_factor) *exact_factor -= 1;
    }
    p.numeric_coefficients.push_back(to_double(signed_b) * factor);
    if (exact_factor) exact.push_back(signed_b * *exact_factor);
    else rational = false;
  }
  if (rational) p.coefficients = std::move(exact);
  return p;
}

nlohmann::json to_json(const ExponentProfile& p) {
  nlohmann::json j;
  j["a"] = p.a;
  j["kind"] = to_string(p.kind);
  nlohmann::json b = nlohmann::json::array();
  for (const Rat& x : p.b) b.push_back(x.get_str());
  j["b"] = b;
  if (p.coefficients) {
    nlohmann::json c = nlohmann::json::array();
    for (const Rat& x : *p.coefficients) c.push_back(x.get_str());
    j["coefficients"] = c;
  }
  return j;
}

namespace {

double evaluate(const ExponentProfile& p, double n) {
  double s = 0;
  for (std::size_t i = 0; i < p.numeric_coefficients.size(); ++i) {
    const double m = static_cast<double>(i + 1);
    s += p.numeric_coefficients[i] * std::pow(n, 1.0 - m / p.a);
  }
  return s;
}

}  // namespace

double linform_exponent(unsigned a, double n) {
  return evaluate(exponent_profile(a, ExponentKind::LinearForm), n);
}

double corollary_exponent(unsigned a, double n) {
  return evaluate(exponent_profile(a, ExponentKind::Decay), n);
}

Rat qn_power(unsigned a) {
  check_a(a);
  return make_rat(static_cast<long>((a - 1) * (a - 1)), static_cast<long>(2 * a));
}

double qn_log_asymptotic(unsigned a, unsigned n) {
  check_a(a);
  if (n < 1) throw std::out_of_range("qn_log_asymptotic: n must be >= 1");
  double log_fact = 0;
  for (unsigned k = 2; k <= n; ++k) log_fact += std::log(static_cast<double>(k));
  const double dn = n;
  return log_fact - 0.5 * std::log(static_cast<double>(a)) -
         0.5 * (a - 1) * std::log(2 * std::numbers::pi) - to_double(qn_power(a)) * std::log(dn) +
         evaluate(exponent_profile(a, ExponentKind::Qn), dn);
}

Rat lagrange_coeff(unsigned a, unsigned m) {
  check_a(a);
  if (m < 1) throw std::out_of_range("lagrange_coeff: m must be >= 1");
  return poch(Rat(2) - make_rat(static_cast<long>(m), static_cast<long>(a)), m - 1) / Rat(factorial(m));
}

std::complex<double> saddle_polynomial(unsigned a, int u, double n, std::complex<double> tau) {
  const double sign = (u % 2 == 0) ? 1.0 : -1.0;
  return sign * n * std::pow(tau - 1.0, static_cast<int>(a)) - std::pow(tau, static_cast<int>(a - 1));
}

namespace {

std::complex<double> saddle_derivative(unsigned a, int u, double n, std::complex<double> tau) {
  const double sign = (u % 2 == 0) ? 1.0 : -1.0;
  std::complex<double> d = sign * n * static_cast<double>(a) * std::pow(tau - 1.0, static_cast<int>(a - 1));
  if (a >= 2) d -= static_cast<double>(a - 1) * std::pow(tau, static_cast<int>(a - 2));
  return d;
}

std::string describe(std::complex<double> z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::fabs(z.imag()) << "i";
  return os.str();
}

}  // namespace

std::complex<double> saddle_seed(unsigned a, int u, double n, unsigned k, unsigned terms) {
  const double phase = (2 * std::numbers::pi * k - std::numbers::pi * u) / a;
  std::complex<double> tau = 1.0;
  for (unsigned m = 1; m <= terms; ++m) {
    const double mag = to_double(lagrange_coeff(a, m)) * std::pow(n, -static_cast<double>(m) / a);
    tau += std::polar(mag, m * phase);
  }
  return tau;
}

std::vector<SaddleRoot> saddle_roots(unsigned a, int u, double n) {
  check_a(a);
  if (std::abs(u) > static_cast<int>(a)) throw std::out_of_range("saddle_roots: |u| must be <= a");
  if (n < kMinSaddleN) throw std::out_of_range("saddle_roots: n must be >= 1e3");
  std::vector<SaddleRoot> roots;
  for (unsigned k = 0; k < a; ++k) {
    const std::complex<double> seed = saddle_seed(a, u, n, k);
    std::complex<double> tau = seed;
    std::complex<double> value = saddle_polynomial(a, u, n, tau);
    unsigned it = 0;
    while (std::abs(value) >= 1e-10 * n) {
      if (it == 100)
        throw NewtonFailure("saddle_roots: no convergence for k=" + std::to_string(k) + " from seed " +
                            describe(seed) + ", residual " + std::to_string(std::abs(value)));
      tau -= value / saddle_derivative(a, u, n, tau);
      value = saddle_polynomial(a, u, n, tau);
      ++it;
    }
    // polish: a few extra steps tighten the root well below the acceptance residual
    for (int extra = 0; extra < 3; ++extra) {
      const std::complex<double> d = saddle_derivative(a, u, n, tau);
      if (d == 0.0) break;
      const std::complex<double> next = tau - saddle_polynomial(a, u, n, tau) / d;
      if (std::abs(saddle_polynomial(a, u, n, next)) > std::abs(value)) break;
      tau = next;
      value = saddle_polynomial(a, u, n, tau);
    }
    roots.push_back({k, {seed.real(), seed.imag()}, {tau.real(), tau.imag()}, std::abs(value) / n, it});
  }
  return roots;
}

}  // namespace bellgamma
