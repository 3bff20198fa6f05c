#include "bellgamma/symring.hpp"

#include "bellgamma/bell.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bellgamma {

SymPoly::SymPoly(unsigned max_zeta) : max_zeta_(max_zeta) {
  if (max_zeta == 0) throw std::invalid_argument("SymPoly: max_zeta must be >= 1");
}

SymPoly SymPoly::constant(unsigned max_zeta, const Rat& c) {
  SymPoly p(max_zeta);
  p.add_term(Exponents(max_zeta, 0), c);
  return p;
}

SymPoly SymPoly::gamma_symbol(unsigned max_zeta) {
  SymPoly p(max_zeta);
  Exponents e(max_zeta, 0);
  e[0] = 1;
  p.add_term(e, Rat(1));
  return p;
}

SymPoly SymPoly::zeta_symbol(unsigned max_zeta, unsigned m) {
  if (m < 2 || m > max_zeta) throw std::out_of_range("SymPoly::zeta_symbol: index out of range");
  SymPoly p(max_zeta);
  Exponents e(max_zeta, 0);
  e[m - 1] = 1;
  p.add_term(e, Rat(1));
  return p;
}

bool SymPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::ranges::all_of(terms_.begin()->first, [](unsigned x) { return x == 0; }));
}

Rat SymPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat SymPoly::constant_term() const { return coefficient(Exponents(max_zeta_, 0)); }

unsigned SymPoly::degree_in_gamma() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0]);
  return d;
}

bool SymPoly::is_integral() const {
  return std::ranges::all_of(terms_, [](const auto& t) { return is_integer(t.second); });
}

void SymPoly::require_same_ring(const SymPoly& o) const {
  if (o.max_zeta_ != max_zeta_) throw std::invalid_argument("SymPoly: mismatched symbol sets");
}

void SymPoly::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly SymPoly::operator-() const {
  SymPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  a.require_same_ring(b);
  SymPoly r(a.max_zeta_);
  SymPoly::Exponents e(a.max_zeta_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (unsigned i = 0; i < a.max_zeta_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, Rat(ca * cb));
    }
  }
  return r;
}

SymPoly& SymPoly::operator*=(const SymPoly& o) { return *this = *this * o; }

SymPoly& SymPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

namespace {

std::string monomial_string(const SymPoly::Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i == 0 ? std::string("g") : "z" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

unsigned total_degree(const SymPoly::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rat>> ordered(terms_.begin(), terms_.end());
  // graded, then lexicographic, both descending
  std::ranges::sort(ordered, [](const auto& x, const auto& y) {
    unsigned dx = total_degree(x.first), dy = total_degree(y.first);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rat mag = ::abs(c);
    std::string mono = monomial_string(e);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

SymPoly sp_add(const SymPoly& p, const SymPoly& q) { return p + q; }
SymPoly sp_mul(const SymPoly& p, const SymPoly& q) { return p * q; }

BigFix sp_eval(const SymPoly& p, const BigFix& gamma_val, std::span<const BigFix> zeta_vals) {
  const unsigned scale = gamma_val.scale();
  const unsigned nsym = p.max_zeta();
  std::vector<unsigned> max_exp(nsym, 0);
  for (const auto& [e, c] : p.terms())
    for (unsigned i = 0; i < nsym; ++i) max_exp[i] = std::max(max_exp[i], e[i]);

  // powers[i][k] = (value of symbol i)^k
  std::vector<std::vector<BigFix>> powers(nsym);
  for (unsigned i = 0; i < nsym; ++i) {
    if (max_exp[i] == 0) continue;
    const BigFix* base = &gamma_val;
    if (i > 0) {
      if (i - 1 >= zeta_vals.size())
        throw std::invalid_argument("sp_eval: missing value for z" + std::to_string(i + 1));
      base = &zeta_vals[i - 1];
      if (base->scale() != scale) throw std::invalid_argument("sp_eval: scale mismatch");
    }
    powers[i].push_back(BigFix::from_integer(1, scale));
    for (unsigned k = 1; k <= max_exp[i]; ++k) powers[i].push_back(powers[i].back() * *base);
  }

  BigFix sum(0, scale);
  for (const auto& [e, c] : p.terms()) {
    // keep the exact coefficient until the end: c * prod(powers)
    BigFix mono = BigFix::from_integer(1, scale);
    for (unsigned i = 0; i < nsym; ++i)
      if (e[i] > 0) mono *= powers[i][e[i]];
    sum += BigFix(div_round(mono.mantissa() * c.get_num(), c.get_den()), scale);
  }
  return sum;
}

std::vector<SymPoly> alpha_arguments(unsigned a, unsigned count, unsigned max_zeta) {
  std::vector<SymPoly> xs;
  xs.reserve(count);
  for (unsigned m = 1; m <= count; ++m) {
    if (m == 1) {
      xs.push_back(SymPoly::gamma_symbol(max_zeta));
    } else {
      const long sign = (m % 2 == 0) ? 1 : -1;
      Integer scalar = factorial(m - 1) * (Integer(a) + Integer(sign) * Integer(a - 1));
      xs.push_back(SymPoly::zeta_symbol(max_zeta, m) * scalar);
    }
  }
  return xs;
}

namespace {

void check_mu(unsigned a, unsigned mu) {
  if (a < 2) throw std::out_of_range("a must be >= 2");
  if (mu < 1 || mu > a - 1) throw std::out_of_range("mu must lie in 1..a-1");
}

}  // namespace

SymPoly alpha_mu(unsigned a, unsigned mu) {
  check_mu(a, mu);
  const unsigned M = symbol_count(a);
  auto xs = alpha_arguments(a, mu, M);
  return bell_eval<SymPoly>(xs, SymPoly::constant(M, Rat(1)));
}

SymPoly lambda_coeff(unsigned a, unsigned mu, unsigned nu) {
  check_mu(a, mu);
  if (nu < 1 || nu > mu) throw std::out_of_range("nu must lie in 1..mu");
  const unsigned M = symbol_count(a);
  auto xs = alpha_arguments(a, mu - nu, M);
  return bell_eval<SymPoly>(xs, SymPoly::constant(M, Rat(1))) * binom(mu, nu);
}

}  // namespace bellgamma
