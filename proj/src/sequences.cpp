#include "bellgamma/sequences.hpp"

#include "bellgamma/asymptotics.hpp"
#include "bellgamma/bell.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace bellgamma {

namespace {

void check_a(unsigned a) {
  if (a < 2) throw std::out_of_range("a must be >= 2");
}

void check_mu(unsigned a, unsigned mu) {
  check_a(a);
  if (mu < 1 || mu > a - 1) throw std::out_of_range("mu must lie in 1..a-1");
}

Integer weight(unsigned a, unsigned n, unsigned k) { return ipow(binom(n, k), a) * factorial(k); }

}  // namespace

HarmonicCache::HarmonicCache(unsigned n_max, unsigned m_max) : n_max_(n_max), m_max_(m_max) {
  table_.resize(m_max);
  for (unsigned m = 1; m <= m_max; ++m) {
    auto& row = table_[m - 1];
    row.reserve(n_max + 1);
    row.emplace_back(0);
    for (unsigned k = 1; k <= n_max; ++k) row.push_back(row.back() + make_rat(Integer(1), ipow(Integer(k), m)));
  }
}

const Rat& HarmonicCache::operator()(unsigned k, unsigned m) const {
  if (m < 1 || m > m_max_ || k > n_max_) throw std::out_of_range("HarmonicCache: index out of range");
  return table_[m - 1][k];
}

Rat harmonic(unsigned k, unsigned m) {
  if (m < 1) throw std::out_of_range("harmonic: m must be >= 1");
  Rat s = 0;
  for (unsigned j = 1; j <= k; ++j) s += make_rat(Integer(1), ipow(Integer(j), m));
  return s;
}

Rat r_val(const HarmonicCache& h, unsigned a, unsigned n, unsigned k, unsigned m) {
  if (k > n) throw std::out_of_range("r_val: k > n");
  if (m < 1) throw std::out_of_range("r_val: m must be >= 1");
  Rat inner = Rat(a) * h(n - k, m);
  const Rat tail = Rat(a - 1) * h(k, m);
  if (m % 2 == 0) inner += tail; else inner -= tail;
  return inner * Rat(factorial(m - 1));
}

Rat r_val(unsigned a, unsigned n, unsigned k, unsigned m) {
  if (k > n) throw std::out_of_range("r_val: k > n");
  return r_val(HarmonicCache(n, m), a, n, k, m);
}

Integer q_value(unsigned a, unsigned n) {
  Integer s = 0;
  for (unsigned k = 0; k <= n; ++k) s += weight(a, n, k);
  return s;
}

std::vector<Integer> q_seq(unsigned a, unsigned n_max) {
  check_a(a);
  std::vector<Integer> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(q_value(a, n));
  return out;
}

namespace {

// p_{n,1..mu_max} for a single n.
std::vector<Rat> p_values_at(const HarmonicCache& h, unsigned a, unsigned mu_max, unsigned n) {
  std::vector<Rat> p(mu_max + 1, Rat(0));
  std::vector<Rat> r(mu_max);
  for (unsigned k = 0; k <= n; ++k) {
    const Rat w(weight(a, n, k));
    for (unsigned m = 1; m <= mu_max; ++m) r[m - 1] = r_val(h, a, n, k, m);
    const std::vector<Rat> ys = bell_table<Rat>(r, Rat(1));
    for (unsigned mu = 1; mu <= mu_max; ++mu) p[mu] += w * ys[mu];
  }
  return p;
}

}  // namespace

Rat p_value(unsigned a, unsigned mu, unsigned n) {
  check_mu(a, mu);
  return p_values_at(HarmonicCache(n, mu), a, mu, n)[mu];
}

std::vector<Rat> p_seq(unsigned a, unsigned mu, unsigned n_max) {
  check_mu(a, mu);
  const HarmonicCache h(n_max, mu);
  std::vector<Rat> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(p_values_at(h, a, mu, n)[mu]);
  return out;
}

ApproximantTable approximant_table(unsigned a, unsigned n_max) {
  check_a(a);
  ApproximantTable t;
  t.a = a;
  t.q = q_seq(a, n_max);
  t.p.resize(a);
  const HarmonicCache h(n_max, a - 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    std::vector<Rat> pv = p_values_at(h, a, a - 1, n);
    for (unsigned mu = 1; mu < a; ++mu) t.p[mu].push_back(std::move(pv[mu]));
  }
  return t;
}

bool integrality_check(const Rat& p, unsigned mu, unsigned n) {
  const Integer d = ipow(lcm_upto(n), mu);
  return mpz_divisible_p(Integer(p.get_num() * d).get_mpz_t(), p.get_den().get_mpz_t()) != 0;
}

bool integrality_check(unsigned a, unsigned mu, unsigned n) {
  return integrality_check(p_value(a, mu, n), mu, n);
}

namespace {

SymPoly f_deriv_sym(const HarmonicCache& h, unsigned a, unsigned n, unsigned k, unsigned m) {
  const unsigned M = symbol_count(a);
  SymPoly r = SymPoly::constant(M, r_val(h, a, n, k, m));
  if (m == 1) return r - SymPoly::gamma_symbol(M);
  // (m-1)! ((-1)^{m-1}(a-1) - a)
  const long odd_sign = (m % 2 == 1) ? 1 : -1;
  Integer c = factorial(m - 1) * (Integer(odd_sign) * Integer(a - 1) - Integer(a));
  return r + SymPoly::zeta_symbol(M, m) * c;
}

}  // namespace

SymPoly f_deriv_sym(unsigned a, unsigned n, unsigned k, unsigned m) {
  check_a(a);
  if (k > n) throw std::out_of_range("f_deriv_sym: k > n");
  if (m < 1 || m > a - 1) throw std::out_of_range("f_deriv_sym: m must lie in 1..a-1");
  return f_deriv_sym(HarmonicCache(n, m), a, n, k, m);
}

std::vector<SymPoly> F_sym_all(unsigned a, unsigned n) {
  check_a(a);
  const unsigned M = symbol_count(a);
  const unsigned mu_max = a - 1;
  const HarmonicCache h(n, mu_max);
  const SymPoly one = SymPoly::constant(M, Rat(1));
  std::vector<SymPoly> F(mu_max + 1, SymPoly(M));
  std::vector<SymPoly> fs;
  for (unsigned k = 0; k <= n; ++k) {
    fs.clear();
    for (unsigned m = 1; m <= mu_max; ++m) fs.push_back(f_deriv_sym(h, a, n, k, m));
    const std::vector<SymPoly> ys = bell_table<SymPoly>(fs, one);
    const Integer w = weight(a, n, k);
    for (unsigned mu = 0; mu <= mu_max; ++mu) F[mu] += ys[mu] * w;
  }
  return F;
}

SymPoly F_sym(unsigned a, unsigned mu, unsigned n) {
  check_a(a);
  if (mu > a - 1) throw std::out_of_range("F_sym: mu must lie in 0..a-1");
  return F_sym_all(a, n)[mu];
}

SymPoly lemma1_residual(unsigned a, unsigned mu, unsigned n) {
  check_mu(a, mu);
  const unsigned M = symbol_count(a);
  const std::vector<SymPoly> F = F_sym_all(a, n);
  SymPoly res = SymPoly::constant(M, p_value(a, mu, n)) - alpha_mu(a, mu) * q_value(a, n);
  for (unsigned nu = 1; nu <= mu; ++nu) res -= lambda_coeff(a, mu, nu) * F[nu];
  return res;
}

std::pair<std::vector<Integer>, std::vector<Rat>> aptekarev_seq(unsigned n_max) {
  const HarmonicCache h(2 * n_max, 1);
  std::vector<Integer> q;
  std::vector<Rat> p;
  for (unsigned n = 0; n <= n_max; ++n) {
    Integer qs = 0;
    Rat ps = 0;
    for (unsigned k = 0; k <= n; ++k) {
      const Integer w = ipow(binom(n, k), 2) * factorial(n + k);
      qs += w;
      ps += Rat(w) * (h(n + k, 1) + Rat(2) * h(n - k, 1) - Rat(2) * h(k, 1));
    }
    q.push_back(std::move(qs));
    p.push_back(std::move(ps));
  }
  return {std::move(q), std::move(p)};
}

BigFix tail_series(unsigned a, int u, unsigned n, unsigned digits) {
  check_a(a);
  if (n < 1) throw std::out_of_range("tail_series: n must be >= 1");
  if (std::abs(u) > static_cast<int>(a)) throw std::out_of_range("tail_series: |u| must be <= a");
  const unsigned w = digits + 10;
  const BigFix cutoff(1, digits + 5);
  // t_k = k!^{a-1} / ((n+2)_k)^a, t_{k+1} = t_k (k+1)^{a-1} / (n+2+k)^a
  Rat t = 1;
  BigFix sum(0, w);
  for (unsigned long k = 0;; ++k) {
    BigFix term = BigFix::from_rat(t, w);
    if (term.rescaled(digits + 5) < cutoff && k > 0) break;
    // (-1)^{(u+1)k + a - 1}
    const long parity = ((static_cast<long>(u) + 1) * static_cast<long>(k) + static_cast<long>(a) - 1) % 2;
    if (parity == 0) sum += term; else sum -= term;
    t *= make_rat(ipow(Integer(k + 1), a - 1), ipow(Integer(n + 2 + k), a));
  }
  sum /= ipow(Integer(n + 1), a);
  return sum.rescaled(digits);
}

BigFix tail_bound(unsigned a, unsigned n, unsigned digits) {
  const unsigned w = digits + 10;
  BigFix e(0, w);
  Integer f = 1;
  for (unsigned long k = 0;; ++k) {
    if (k > 0) f *= k;
    BigFix term = BigFix(div_round(pow10(w), f), w);
    if (term.is_zero()) break;
    e += term;
  }
  e /= ipow(Integer(n + 1), a);
  return e.rescaled(digits);
}

ReferenceConstants reference_constants(unsigned max_zeta, unsigned digits) {
  ReferenceConstants c;
  c.digits = digits;
  c.gamma = gamma_const(digits);
  for (unsigned m = 2; m <= max_zeta; ++m) c.zetas.push_back(zeta_const(m, digits));
  return c;
}

unsigned convergence_digits(unsigned a, unsigned n) {
  const double e = corollary_exponent(a, static_cast<double>(n));
  return static_cast<unsigned>(std::ceil(std::max(0.0, -e) / std::numbers::ln10)) + 30;
}

namespace {

BigFix approximation_error(const SymPoly& alpha, const Rat& ratio, const ReferenceConstants& c) {
  BigFix v = sp_eval(alpha, c.gamma, c.zetas);
  return (v - BigFix::from_rat(ratio, c.digits)).abs();
}

}  // namespace

ApproxRecord convergence_row(unsigned a, unsigned mu, unsigned n, const Rat& p, const Integer& q,
                             const ReferenceConstants& lo, const ReferenceConstants& hi) {
  check_mu(a, mu);
  const SymPoly alpha = alpha_mu(a, mu);
  const Rat ratio = p / Rat(q);
  const BigFix err_lo = approximation_error(alpha, ratio, lo);
  const BigFix err_hi = approximation_error(alpha, ratio, hi);
  if (err_lo.is_zero() || err_hi.is_zero())
    throw PrecisionError("convergence_row: error below working precision");
  const double log_lo = ln(err_lo).to_double();
  const double log_hi = ln(err_hi).to_double();
  if (std::fabs(log_lo - log_hi) > 1e-6)
    throw PrecisionError("convergence_row: guard-digit runs disagree (a=" + std::to_string(a) +
                         ", mu=" + std::to_string(mu) + ", n=" + std::to_string(n) + ")");
  ApproxRecord r;
  r.a = a;
  r.mu = mu;
  r.n = n;
  r.p = p;
  r.q = q;
  r.err_log = log_hi;
  r.predicted_exponent = corollary_exponent(a, static_cast<double>(n));
  return r;
}

ApproxRecord convergence_row(unsigned a, unsigned mu, unsigned n, unsigned digits) {
  check_mu(a, mu);
  if (digits == 0) digits = convergence_digits(a, n);
  const unsigned M = symbol_count(a);
  const ReferenceConstants lo = reference_constants(M, digits);
  const ReferenceConstants hi = reference_constants(M, digits + 10);
  return convergence_row(a, mu, n, p_value(a, mu, n), q_value(a, n), lo, hi);
}

bool verify_record(const ApproxRecord& r) {
  return r.q == q_value(r.a, r.n) && r.p == p_value(r.a, r.mu, r.n);
}

std::string format_log10(double ln_value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", ln_value / std::numbers::ln10);
  return buf;
}

void write_csv_header(std::ostream& out, bool with_qratio) {
  out << kCsvHeader;
  if (with_qratio) out << ",q_ratio";
  out << '\n';
}

void write_csv_row(std::ostream& out, const ApproxRecord& r, std::optional<double> qratio) {
  out << r.a << ',' << r.mu << ',' << r.n << ',' << r.p.get_num().get_str() << ',' << r.p.get_den().get_str()
      << ',' << r.q.get_str() << ',' << format_log10(r.err_log) << ',' << format_log10(r.predicted_exponent);
  if (qratio) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", *qratio);
    out << ',' << buf;
  }
  out << '\n';
}

nlohmann::json to_json(const ApproxRecord& r, std::optional<double> qratio) {
  nlohmann::json j;
  j["a"] = r.a;
  j["mu"] = r.mu;
  j["n"] = r.n;
  j["p_num"] = r.p.get_num().get_str();
  j["p_den"] = r.p.get_den().get_str();
  j["q"] = r.q.get_str();
  j["err_log10"] = std::stod(format_log10(r.err_log));
  j["predicted_log10"] = std::stod(format_log10(r.predicted_exponent));
  if (qratio) j["q_ratio"] = *qratio;
  return j;
}

}  // namespace bellgamma
