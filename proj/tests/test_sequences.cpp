#include "bellgamma/asymptotics.hpp"
#include "bellgamma/recurrences.hpp"
#include "bellgamma/sequences.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

using namespace bellgamma;

namespace {

Integer q_direct(unsigned a, unsigned n) {
  const auto row = oracle::pascal_row(n);
  Integer s = 0;
  for (unsigned k = 0; k <= n; ++k) s += ipow(row[k], a) * Integer(std::to_string(oracle::factorial_u64(k)));
  return s;
}

Rat h_direct(unsigned n, unsigned m) {
  Rat s = 0;
  for (unsigned j = 1; j <= n; ++j) s += Rat(1) / Rat(ipow(Integer(j), m));
  return s;
}

}  // namespace

TEST_SUITE("sequences") {
  TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0, 1) == 0);
    CHECK(harmonic(0, 4) == 0);
    CHECK(harmonic(3, 1) == Rat(11, 6));
    CHECK(harmonic(2, 2) == Rat(5, 4));
    const HarmonicCache h(30, 4);
    for (unsigned m = 1; m <= 4; ++m)
      for (unsigned k = 0; k <= 30; ++k) CHECK(h(k, m) == h_direct(k, m));
    CHECK_THROWS_AS(h(31, 1), std::out_of_range);
    CHECK_THROWS_AS(h(3, 5), std::out_of_range);
    CHECK_THROWS_AS(h(3, 0), std::out_of_range);
  }

  TEST_CASE("r values") {
    for (unsigned n : {0u, 4u, 9u}) CHECK(r_val(3, n, n, 1) == Rat(-2) * harmonic(n, 1));
    CHECK(r_val(3, 2, 1, 1) == 1);
    CHECK(r_val(2, 1, 0, 2) == 2);
    // r_3(k) for a = 4, n = 5, k = 2: 2! (4 H_3^(3) - 3 H_2^(3))
    CHECK(r_val(4, 5, 2, 3) == Rat(2) * (Rat(4) * h_direct(3, 3) - Rat(3) * h_direct(2, 3)));
    const HarmonicCache h(10, 3);
    CHECK(r_val(h, 4, 5, 2, 3) == r_val(4, 5, 2, 3));
    CHECK_THROWS_AS(r_val(3, 2, 3, 1), std::out_of_range);
    CHECK_THROWS_AS(r_val(3, 2, 1, 0), std::out_of_range);
  }

  TEST_CASE("q_n") {
    CHECK(q_seq(3, 2) == std::vector<Integer>{1, 2, 11});
    CHECK(q_seq(4, 3) == std::vector<Integer>{1, 2, 19, 250});
    CHECK(q_seq(2, 1) == std::vector<Integer>{1, 2});
    for (unsigned a = 2; a <= 6; ++a)
      for (unsigned n = 0; n <= 20; ++n) CHECK(q_value(a, n) == q_direct(a, n));
    CHECK_THROWS_AS(q_seq(1, 3), std::out_of_range);
  }

  TEST_CASE("p_{n,mu}") {
    CHECK(p_seq(3, 1, 2) == std::vector<Rat>{0, 1, Rat(13, 2)});
    CHECK(p_seq(3, 2, 2) == std::vector<Rat>{0, 18, 95});
    CHECK(p_seq(4, 1, 3) == std::vector<Rat>{0, 1, 13, Rat(409, 3)});
    CHECK(p_seq(4, 2, 3) == std::vector<Rat>{0, 32, 217, Rat(26444, 9)});
    CHECK(p_seq(4, 3, 3) == std::vector<Rat>{0, 60, 402, Rat(50761, 9)});
    CHECK(p_seq(2, 1, 1) == std::vector<Rat>{0, 1});
    CHECK(p_value(4, 3, 3) == Rat(50761, 9));
    CHECK_THROWS_AS(p_seq(3, 3, 2), std::out_of_range);
    CHECK_THROWS_AS(p_seq(3, 0, 2), std::out_of_range);
  }

  TEST_CASE("approximant table matches the single-sequence functions") {
    const ApproximantTable t = approximant_table(4, 12);
    CHECK(t.q == q_seq(4, 12));
    for (unsigned mu = 1; mu < 4; ++mu) CHECK(t.p[mu] == p_seq(4, mu, 12));
  }

  TEST_CASE("integrality") {
    CHECK(integrality_check(3, 1, 2));
    CHECK(integrality_check(4, 2, 3));
    CHECK(integrality_check(5, 4, 0));
    CHECK(integrality_check(Rat(13, 2), 1, 2));
    CHECK_FALSE(integrality_check(Rat(13, 4), 1, 2));
    CHECK(lcm_upto(3) * lcm_upto(3) * Rat(26444, 9) == 105776);
  }

  TEST_CASE("f derivatives") {
    const SymPoly g = SymPoly::gamma_symbol(2);
    CHECK(f_deriv_sym(3, 0, 0, 1) == -g);
    const SymPoly d2 = f_deriv_sym(3, 6, 2, 2);
    CHECK(d2.coefficient({0, 1}) == -5);
    CHECK(d2.constant_term() == r_val(3, 6, 2, 2));
    for (unsigned m = 1; m <= 3; ++m) CHECK(f_deriv_sym(4, 7, 3, m).constant_term() == r_val(4, 7, 3, m));
    CHECK(f_deriv_sym(4, 7, 3, 1) == SymPoly::constant(3, r_val(4, 7, 3, 1)) - SymPoly::gamma_symbol(3));
    CHECK_THROWS_AS(f_deriv_sym(3, 2, 3, 1), std::out_of_range);
    CHECK_THROWS_AS(f_deriv_sym(3, 2, 1, 3), std::out_of_range);
  }

  TEST_CASE("F_{n,mu}") {
    for (unsigned n = 0; n <= 6; ++n) CHECK(F_sym(3, 0, n) == SymPoly::constant(2, Rat(q_value(3, n))));
    CHECK(F_sym(2, 1, 0) == -SymPoly::gamma_symbol(1));
    CHECK(F_sym(3, 1, 2) == SymPoly::constant(2, Rat(13, 2)) - SymPoly::gamma_symbol(2) * Rat(11));
    const auto all = F_sym_all(4, 5);
    REQUIRE(all.size() == 4);
    for (unsigned mu = 0; mu < 4; ++mu) CHECK(all[mu] == F_sym(4, mu, 5));
    CHECK_THROWS_AS(F_sym(3, 3, 2), std::out_of_range);
  }

  TEST_CASE("symbolic residual of the integral representation") {
    CHECK(lemma1_residual(2, 1, 3).is_zero());
    CHECK(lemma1_residual(4, 3, 5).is_zero());
    CHECK(lemma1_residual(3, 2, 0).is_zero());
    CHECK_THROWS_AS(lemma1_residual(3, 3, 1), std::out_of_range);
  }

  TEST_CASE("Aptekarev sequences") {
    const auto [q, p] = aptekarev_seq(8);
    CHECK(q[0] == 1);
    CHECK(q[1] == 3);
    CHECK(q[2] == 50);
    CHECK(p[0] == 0);
    CHECK(p[1] == 2);
    CHECK(p[2] == 31);
    const auto specs = make_paper_recurrences();
    const auto& spec = specs.at("aptekarev");
    const auto gen = solve_recurrence(spec, spec.initial_values.at("q"), 8);
    for (unsigned n = 0; n <= 8; ++n) CHECK(gen[n] == Rat(q[n]));
  }

  TEST_CASE("tail series") {
    for (unsigned a : {2u, 3u, 4u})
      for (int u = -static_cast<int>(a); u <= static_cast<int>(a); ++u)
        for (unsigned n : {1u, 5u, 10u, 20u}) CHECK(tail_series(a, u, n, 30).abs() <= tail_bound(a, n, 30));
    CHECK(std::fabs(tail_bound(2, 10, 20).to_double() - std::exp(1.0) / 121) < 1e-15);

    // double-precision direct sum
    auto direct = [](unsigned a, int u, unsigned n) {
      double s = 0, term = 1;
      for (unsigned k = 0; k < 60; ++k) {
        const long e = static_cast<long>(u + 1) * k + a - 1;
        s += (e % 2 == 0 ? 1.0 : -1.0) * term;
        term *= std::pow(k + 1.0, a - 1.0) / std::pow(n + 2.0 + k, a);
      }
      return s / std::pow(n + 1.0, a);
    };
    for (int u : {-2, 0, 1, 3}) CHECK(tail_series(3, u, 7, 25).to_double() == doctest::Approx(direct(3, u, 7)).epsilon(1e-12));

    // first term (-1)^{a-1}/(n+1)^a dominates for large n
    CHECK(tail_series(2, 0, 1000, 12).to_double() == doctest::Approx(-1.0 / (1001.0 * 1001.0)).epsilon(1e-3));
    CHECK_THROWS_AS(tail_series(2, 3, 5, 10), std::out_of_range);
    CHECK_THROWS_AS(tail_series(2, 0, 0, 10), std::out_of_range);
  }

  TEST_CASE("convergence rows") {
    const ApproxRecord r0 = convergence_row(2, 1, 0);
    CHECK(r0.p == 0);
    CHECK(r0.q == 1);
    CHECK(r0.err_log == doctest::Approx(std::log(0.5772156649015329)));

    const ApproxRecord r = convergence_row(3, 1, 50);
    const double E = corollary_exponent(3, 50);
    CHECK(r.predicted_exponent == doctest::Approx(E));
    CHECK(r.err_log >= 1.15 * E - 5);
    CHECK(r.err_log <= 0.85 * E + 5);
    CHECK(verify_record(r));
    ApproxRecord bad = r;
    bad.q += 1;
    CHECK_FALSE(verify_record(bad));

    double prev = 0;
    for (unsigned n : {50u, 100u, 200u}) {
      const double e = convergence_row(3, 1, n).err_log;
      CHECK(e < prev);
      prev = e;
    }
    CHECK(convergence_digits(3, 100) == static_cast<unsigned>(std::ceil(-corollary_exponent(3, 100) / std::log(10.0))) + 30);
    // 20 digits cannot resolve an error near 1e-62
    CHECK_THROWS_AS(convergence_row(3, 1, 200, 20), PrecisionError);
    CHECK_THROWS_AS(convergence_row(3, 3, 10), std::out_of_range);
  }

  TEST_CASE("csv and json rows") {
    ApproxRecord r;
    r.a = 3;
    r.mu = 1;
    r.n = 2;
    r.p = Rat(13, 2);
    r.q = 11;
    r.err_log = -1.86349 * std::log(10.0);
    r.predicted_exponent = std::log(10.0) * -2.5;
    std::ostringstream os;
    write_csv_header(os);
    write_csv_row(os, r);
    CHECK(os.str() == "a,mu,n,p_num,p_den,q,err_log10,predicted_log10\n3,1,2,13,2,11,-1.86349,-2.5\n");
    std::ostringstream os2;
    write_csv_header(os2, true);
    write_csv_row(os2, r, 1.25);
    CHECK(os2.str() == "a,mu,n,p_num,p_den,q,err_log10,predicted_log10,q_ratio\n3,1,2,13,2,11,-1.86349,-2.5,1.25\n");
    const auto j = to_json(r);
    CHECK(j["p_num"] == "13");
    CHECK(j["p_den"] == "2");
    CHECK(j["q"] == "11");
    CHECK(j["err_log10"].get<double>() == doctest::Approx(-1.86349));
    CHECK(format_log10(std::log(1e-7)) == "-7");
  }
}
