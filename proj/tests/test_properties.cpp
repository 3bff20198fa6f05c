// Randomized identities with a fixed seed, so failures reproduce.
#include "bellgamma/bell.hpp"
#include "bellgamma/bernoulli.hpp"
#include "bellgamma/powerseries.hpp"
#include "bellgamma/sequences.hpp"
#include "oracles.hpp"

#include <cmath>
#include <doctest.h>

#include <random>

using namespace bellgamma;

namespace {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  Rat rat(long bound = 30, long den_max = 12) { return make_rat(integer(-bound, bound), integer(1, den_max)); }

  Rat nonzero_rat() {
    Rat r;
    do r = rat(); while (r == 0);
    return r;
  }

  SymPoly sympoly(unsigned M, unsigned max_deg = 6, unsigned terms = 4) {
    SymPoly p(M);
    for (unsigned t = 0; t < terms; ++t) {
      SymPoly mono = SymPoly::constant(M, rat(9, 5));
      unsigned deg = static_cast<unsigned>(integer(0, max_deg));
      for (unsigned d = 0; d < deg; ++d) {
        const unsigned which = static_cast<unsigned>(integer(1, M));
        mono = mono * (which == 1 ? SymPoly::gamma_symbol(M) : SymPoly::zeta_symbol(M, which));
      }
      p += mono;
    }
    return p;
  }

  SeriesQ series(unsigned order, bool zero_constant) {
    std::vector<Rat> c(order + 1);
    for (auto& x : c) x = rat(5, 6);
    if (zero_constant) c[0] = 0;
    else c[0] = nonzero_rat();
    return SeriesQ(c, order);
  }
};

bool is_prime_power(const Integer& x) {
  if (x < 2) return false;
  for (unsigned long p = 2; Integer(p) * p <= x; ++p) {
    if (x % p == 0) {
      Integer y = x;
      while (y % p == 0) y /= p;
      return y == 1;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("lcm structure") {
    for (unsigned n = 1; n <= 50; ++n) {
      const Integer d = lcm_upto(n);
      for (unsigned k = 1; k <= n; ++k) CHECK(d % k == 0);
      if (n >= 2) {
        const Integer ratio = d / lcm_upto(n - 1);
        CHECK((ratio == 1 || is_prime_power(ratio)));
      }
    }
  }

  TEST_CASE("rational arithmetic") {
    Gen g(1);
    for (int i = 0; i < 300; ++i) {
      const Integer num(g.integer(-1000, 1000)), den(g.integer(-1000, 1000));
      if (den == 0) continue;
      const Rat r = make_rat(num, den);
      Integer gcd;
      mpz_gcd(gcd.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
      CHECK(r.get_den() > 0);
      CHECK(gcd == 1);
      const Rat a = g.rat(), b = g.rat(), c = g.rat();
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
    }
  }

  TEST_CASE("poch shift") {
    Gen g(2);
    for (int i = 0; i < 100; ++i) {
      const Rat x = g.rat();
      const unsigned m = static_cast<unsigned>(g.integer(0, 30));
      CHECK(poch(x, m + 1) == poch(x, m) * (x + m));
    }
  }

  TEST_CASE("guard-digit agreement of the constants") {
    Gen g(3);
    for (int i = 0; i < 6; ++i) {
      const unsigned d = static_cast<unsigned>(g.integer(5, 120));
      const unsigned m = static_cast<unsigned>(g.integer(2, 9));
      CHECK(gamma_const(d + 10).rescaled(d) == gamma_const(d));
      CHECK(zeta_const(m, d + 10).rescaled(d) == zeta_const(m, d));
    }
  }

  TEST_CASE("SymPoly ring axioms") {
    Gen g(4);
    for (int i = 0; i < 40; ++i) {
      const unsigned M = static_cast<unsigned>(g.integer(1, 5));
      const SymPoly p = g.sympoly(M), q = g.sympoly(M), r = g.sympoly(M);
      CHECK((p + q) + r == p + (q + r));
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(p * q == q * p);
      CHECK((p - p).is_zero());
      const SymPoly pq = p * q;
      for (const auto& [e, c] : pq.terms()) CHECK(c != 0);
    }
  }

  TEST_CASE("sp_eval is multiplicative") {
    Gen g(5);
    const unsigned D = 40, M = 4;
    const BigFix gam = gamma_const(D);
    std::vector<BigFix> zs;
    for (unsigned m = 2; m <= M; ++m) zs.push_back(zeta_const(m, D));
    for (int i = 0; i < 20; ++i) {
      const SymPoly p = g.sympoly(M, 3), q = g.sympoly(M, 3);
      const BigFix lhs = sp_eval(p * q, gam, zs);
      const BigFix rhs = sp_eval(p, gam, zs) * sp_eval(q, gam, zs);
      CHECK((lhs - rhs).abs() <= BigFix(Integer(100), D));  // 2 guard digits
    }
  }

  TEST_CASE("Bell recurrence equals the partition sum") {
    Gen g(6);
    for (unsigned n = 0; n <= 8; ++n) {
      for (int t = 0; t < 5; ++t) {
        std::vector<Rat> xs;
        for (unsigned j = 0; j < n; ++j) xs.push_back(g.rat());
        CHECK(bell_eval<Rat>(xs, Rat(1)) == bell_eval_partitions<Rat>(xs, Rat(1)));
      }
      const unsigned M = 3;
      std::vector<SymPoly> ps;
      for (unsigned j = 0; j < n; ++j) ps.push_back(g.sympoly(M, 2, 2));
      const SymPoly one = SymPoly::constant(M, 1);
      CHECK(bell_eval<SymPoly>(ps, one) == bell_eval_partitions<SymPoly>(ps, one));
    }
  }

  TEST_CASE("Bell addition theorem") {
    Gen g(7);
    for (unsigned n = 0; n <= 7; ++n) {
      std::vector<Rat> x, y, xy;
      for (unsigned j = 0; j < n; ++j) {
        x.push_back(g.rat());
        y.push_back(g.rat());
        xy.push_back(x.back() + y.back());
      }
      const auto yx = bell_table<Rat>(x, Rat(1)), yy = bell_table<Rat>(y, Rat(1));
      Rat rhs = 0;
      for (unsigned k = 0; k <= n; ++k) rhs += Rat(binom(n, k)) * yx[k] * yy[n - k];
      CHECK(bell_eval<Rat>(xy, Rat(1)) == rhs);
    }
  }

  TEST_CASE("series round trips") {
    Gen g(8);
    for (int i = 0; i < 20; ++i) {
      const unsigned N = static_cast<unsigned>(g.integer(0, 10));
      const SeriesQ s = g.series(N, false);
      CHECK(ps_mul(s, ps_recip(s)) == SeriesQ::constant(1, N));
      const SeriesQ t = g.series(N, true);
      CHECK(ps_log1p(ps_exp(t) - SeriesQ::constant(1, N)) == t);
      CHECK(ps_exp(ps_log1p(t)) == SeriesQ::constant(1, N) + t);
    }
  }

  TEST_CASE("generalized Bernoulli identities") {
    Gen g(9);
    for (unsigned m = 1; m <= 5; ++m) {
      const auto B = gen_bernoulli_all(12, m);
      const Rat x = g.rat(), y = g.rat();
      for (unsigned n = 0; n <= 12; ++n) {
        Rat rhs = 0;
        for (unsigned k = 0; k <= n; ++k) rhs += Rat(binom(n, k)) * B[k](y) * ipow(x, n - k);
        CHECK(B[n](x + y) == rhs);
      }
    }
    for (unsigned m = 1; m <= 6; ++m) {
      const auto Bm = gen_bernoulli_all(12, m), Bm1 = gen_bernoulli_all(12, m + 1);
      for (unsigned n = 1; n <= 12; ++n) {
        const Rat x = g.rat();
        CHECK(Rat(m) * Bm1[n](x) == Rat(static_cast<long>(m) - static_cast<long>(n)) * Bm[n](x) +
                                         Rat(n) * (x - m) * Bm[n - 1](x));
      }
    }
    for (unsigned m = 2; m <= 20; m += 2) {
      Rat sum = 0;
      for (unsigned k = 0; k <= m; ++k)
        sum += Rat(binom(m, k)) * bernoulli_at(k, m + 1, make_rat(m + 1, 2)) * Rat(ipow(Integer(2), k));
      CHECK(sum == 0);
    }
    for (unsigned m = 1; m <= 10; ++m)
      for (unsigned n = 0; n <= 10; ++n) CHECK(bernoulli_at(2 * n + 1, m, make_rat(m, 2)) == 0);
    for (unsigned m = 1; m <= 5; ++m) CHECK(csc_power_coeffs(m, 15) == csc_power_coeffs_direct(m, 15));
  }

  TEST_CASE("symbolic residual vanishes") {
    for (unsigned a = 2; a <= 5; ++a)
      for (unsigned mu = 1; mu < a; ++mu)
        for (unsigned n = 0; n <= 30; n += 3) CHECK(lemma1_residual(a, mu, n).is_zero());
  }

  TEST_CASE("integrality and F structure") {
    for (unsigned a = 2; a <= 5; ++a) {
      const ApproximantTable t = approximant_table(a, 60);
      for (unsigned n = 0; n <= 60; ++n) {
        CHECK(t.q[n] > 0);
        for (unsigned mu = 1; mu < a; ++mu) CHECK(integrality_check(t.p[mu][n], mu, n));
      }
      for (unsigned n : {0u, 4u, 11u}) {
        CHECK(F_sym(a, 0, n) == SymPoly::constant(symbol_count(a), Rat(t.q[n])));
        for (unsigned mu = 1; mu < a; ++mu) {
          const SymPoly F = F_sym(a, mu, n);
          CHECK(F.degree_in_gamma() == mu);
          std::vector<unsigned> e(symbol_count(a), 0);
          e[0] = mu;
          CHECK(F.coefficient(e) == Rat(mu % 2 == 0 ? t.q[n] : Integer(-t.q[n])));
        }
      }
    }
  }

  TEST_CASE("a = 2 sequence formula") {
    // p_n = sum binom(n,k)^2 k! (2 H_{n-k} - H_k)
    const auto p = p_seq(2, 1, 100);
    std::vector<Rat> H{0};
    for (unsigned k = 1; k <= 100; ++k) H.push_back(H.back() + Rat(1, k));
    for (unsigned n = 0; n <= 100; n += 7) {
      const auto row = oracle::pascal_row(n);
      Rat s = 0;
      for (unsigned k = 0; k <= n; ++k) s += Rat(row[k] * row[k] * factorial(k)) * (Rat(2) * H[n - k] - H[k]);
      CHECK(p[n] == s);
    }
  }
}
