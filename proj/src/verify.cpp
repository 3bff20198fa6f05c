#include "bellgamma/verify.hpp"

#include "bellgamma/asymptotics.hpp"
#include "bellgamma/bell.hpp"
#include "bellgamma/bernoulli.hpp"
#include "bellgamma/recurrences.hpp"
#include "bellgamma/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace bellgamma {

namespace {

std::vector<unsigned> a_values(const SuiteOptions& opt, std::vector<unsigned> defaults) {
  if (opt.a) return {*opt.a};
  return defaults;
}

std::string range_str(long lo, long hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

std::vector<CheckResult> lemma1_suite(const SuiteOptions& opt) {
  const unsigned n_max = opt.n_max.value_or(30);
  std::vector<CheckResult> out;
  for (unsigned a : a_values(opt, {2, 3, 4, 5})) {
    for (unsigned mu = 1; mu < a; ++mu) {
      CheckResult c{"lemma1", "a=" + std::to_string(a) + " mu=" + std::to_string(mu) + " n=" + range_str(0, n_max),
                    true, ""};
      for (unsigned n = 0; n <= n_max && c.pass; ++n) {
        const SymPoly r = lemma1_residual(a, mu, n);
        if (!r.is_zero()) {
          c.pass = false;
          c.detail = "nonzero residual at n=" + std::to_string(n) + ": " + r.to_string();
        }
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<CheckResult> recurrences_suite(const SuiteOptions& opt) {
  const long n_hi = opt.n_max.value_or(150);
  const long n_lo = 3;
  const unsigned len = static_cast<unsigned>(n_hi) + 4;  // covers shift + order for every spec

  std::map<std::string, std::vector<Rat>> seqs;
  auto as_rat = [](const std::vector<Integer>& v) { return std::vector<Rat>(v.begin(), v.end()); };
  {
    auto [q, p] = aptekarev_seq(len);
    seqs["aptekarev.q"] = as_rat(q);
    seqs["aptekarev.p"] = p;
    auto [P, Q] = rivoal_seq(len);
    seqs["rivoal.P"] = P;
    seqs["rivoal.Q"] = Q;
  }
  for (unsigned a : {2u, 3u, 4u}) {
    const ApproximantTable t = approximant_table(a, len);
    const std::string fam = "a" + std::to_string(a);
    seqs[fam + ".q"] = as_rat(t.q);
    if (a == 2) {
      seqs[fam + ".p"] = t.p[1];
    } else {
      for (unsigned mu = 1; mu < a; ++mu) seqs[fam + ".p" + std::to_string(mu)] = t.p[mu];
    }
  }

  std::vector<CheckResult> out;
  for (const auto& [name, spec] : make_paper_recurrences()) {
    for (const auto& [seq_name, init] : spec.initial_values) {
      const std::vector<Rat>& seq = seqs.at(spec.family + "." + seq_name);
      CheckResult c{"recurrences", name + " " + seq_name + " n=" + range_str(n_lo, n_hi), true, ""};
      if (!std::equal(init.begin(), init.end(), seq.begin())) {
        c.pass = false;
        c.detail = "initial values differ";
      } else {
        const RecurrenceReport rep = recurrence_check(spec, seq, n_lo, n_hi);
        c.pass = rep.holds;
        if (!rep.holds) c.detail = "fails at n=" + std::to_string(*rep.first_failure);
        else if (!rep.skipped.empty()) c.detail = std::to_string(rep.skipped.size()) + " points skipped";
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<CheckResult> integrality_suite(const SuiteOptions& opt) {
  const unsigned n_max = opt.n_max.value_or(150);
  std::vector<CheckResult> out;
  for (unsigned a : a_values(opt, {2, 3, 4, 5})) {
    const ApproximantTable t = approximant_table(a, n_max);
    {
      CheckResult c{"integrality", "a=" + std::to_string(a) + " q_n > 0 n=" + range_str(0, n_max), true, ""};
      for (unsigned n = 0; n <= n_max && c.pass; ++n)
        if (t.q[n] <= 0) c = {c.suite, c.name, false, "q_" + std::to_string(n) + " not positive"};
      out.push_back(std::move(c));
    }
    for (unsigned mu = 1; mu < a; ++mu) {
      CheckResult c{"integrality",
                    "a=" + std::to_string(a) + " D_n^" + std::to_string(mu) + " p_n," + std::to_string(mu) +
                        " n=" + range_str(0, n_max),
                    true, ""};
      for (unsigned n = 0; n <= n_max && c.pass; ++n)
        if (!integrality_check(t.p[mu][n], mu, n)) c = {c.suite, c.name, false, "fails at n=" + std::to_string(n)};
      out.push_back(std::move(c));
    }
  }
  return out;
}

Rat random_rat(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  return make_rat(num(rng), den(rng));
}

CheckResult check(const std::string& suite, const std::string& name, bool pass, std::string detail = "") {
  return {suite, name, pass, pass ? "" : std::move(detail)};
}

std::vector<CheckResult> bernoulli_suite(const SuiteOptions&) {
  const std::string s = "bernoulli";
  std::vector<CheckResult> out;
  std::mt19937 rng(20240601);

  bool ok = true;
  for (unsigned m = 1; m <= 5 && ok; ++m) {
    const std::vector<PolyQ> B = gen_bernoulli_all(12, m);
    for (int trial = 0; trial < 3 && ok; ++trial) {
      const Rat x = random_rat(rng), y = random_rat(rng);
      for (unsigned n = 0; n <= 12 && ok; ++n) {
        Rat rhs = 0;
        for (unsigned k = 0; k <= n; ++k) rhs += Rat(binom(n, k)) * B[k](y) * ipow(x, n - k);
        ok = B[n](x + y) == rhs;
      }
    }
  }
  out.push_back(check(s, "addition formula n<=12 m<=5", ok));

  ok = true;
  for (unsigned m = 1; m <= 6 && ok; ++m) {
    const std::vector<PolyQ> Bm = gen_bernoulli_all(12, m);
    const std::vector<PolyQ> Bm1 = gen_bernoulli_all(12, m + 1);
    for (unsigned n = 1; n <= 12 && ok; ++n) {
      const PolyQ lhs = Bm1[n] * PolyQ::constant(Rat(m));
      const PolyQ rhs = Bm[n] * PolyQ::constant(Rat(static_cast<long>(m) - static_cast<long>(n))) +
                        Bm[n - 1] * (PolyQ::x() - PolyQ::constant(Rat(m))) * PolyQ::constant(Rat(n));
      ok = lhs == rhs;
    }
  }
  out.push_back(check(s, "order recursion n<=12 m<=6", ok));

  ok = true;
  for (unsigned m = 1; m <= 12 && ok; ++m) {
    std::vector<Rat> roots;
    for (unsigned j = 1; j <= m; ++j) roots.emplace_back(j);
    ok = gen_bernoulli(m, m + 1) == PolyQ::from_roots(roots);
  }
  out.push_back(check(s, "B_m^(m+1)(x) = (x-1)...(x-m) m<=12", ok));

  ok = true;
  for (unsigned m = 2; m <= 20 && ok; m += 2) {
    const Rat x = make_rat(static_cast<long>(m + 1), 2);
    Rat sum = 0;
    for (unsigned k = 0; k <= m; ++k) sum += Rat(binom(m, k)) * bernoulli_at(k, m + 1, x) * Rat(ipow(Integer(2), k));
    ok = sum == 0 && bernoulli_at(m, m + 1, make_rat(static_cast<long>(m), 2) + 1) == 0;
  }
  out.push_back(check(s, "even-m identities m<=20", ok));

  ok = true;
  for (unsigned m = 1; m <= 10 && ok; ++m) {
    const std::vector<PolyQ> B = gen_bernoulli_all(21, m);
    const Rat half = make_rat(static_cast<long>(m), 2);
    for (unsigned n = 0; n <= 10 && ok; ++n) ok = B[2 * n + 1](half) == 0;
  }
  out.push_back(check(s, "odd index vanishing at m/2 n<=10 m<=10", ok));

  ok = true;
  for (unsigned m = 1; m <= 5 && ok; ++m) ok = csc_power_coeffs(m, 15) == csc_power_coeffs_direct(m, 15);
  out.push_back(check(s, "(z/sin z)^m coefficients N<=15 m<=5", ok));
  return out;
}

std::vector<CheckResult> bell_suite(const SuiteOptions&) {
  const std::string s = "bell";
  std::vector<CheckResult> out;
  std::mt19937 rng(7);

  bool ok = true;
  for (unsigned n = 0; n <= 8 && ok; ++n) {
    for (int trial = 0; trial < 4 && ok; ++trial) {
      std::vector<Rat> xs;
      for (unsigned j = 0; j < n; ++j) xs.push_back(random_rat(rng));
      ok = bell_eval<Rat>(xs, Rat(1)) == bell_eval_partitions<Rat>(xs, Rat(1));
    }
  }
  out.push_back(check(s, "recurrence = partition sum over Q n<=8", ok));

  // distinct formal symbols x_1 = g, x_j = z_j
  const unsigned M = 8;
  std::vector<SymPoly> formal{SymPoly::gamma_symbol(M)};
  for (unsigned j = 2; j <= M; ++j) formal.push_back(SymPoly::zeta_symbol(M, j));
  const SymPoly one = SymPoly::constant(M, 1);
  ok = true;
  bool integral = true;
  for (unsigned n = 0; n <= 8 && ok; ++n) {
    std::span<const SymPoly> xs(formal.data(), n);
    const SymPoly y = bell_eval<SymPoly>(xs, one);
    ok = y == bell_eval_partitions<SymPoly>(xs, one);
    for (const auto& [e, c] : y.terms()) integral = integral && is_integer(c) && c > 0;
  }
  out.push_back(check(s, "recurrence = partition sum over formal symbols n<=8", ok));
  out.push_back(check(s, "positive integer coefficients n<=8", integral));

  ok = true;
  for (unsigned n = 0; n <= 7 && ok; ++n) {
    std::vector<Rat> x, y, xy;
    for (unsigned j = 0; j < n; ++j) {
      x.push_back(random_rat(rng));
      y.push_back(random_rat(rng));
      xy.push_back(x.back() + y.back());
    }
    Rat rhs = 0;
    const std::vector<Rat> yx = bell_table<Rat>(x, Rat(1)), yy = bell_table<Rat>(y, Rat(1));
    for (unsigned k = 0; k <= n; ++k) rhs += Rat(binom(n, k)) * yx[k] * yy[n - k];
    ok = bell_eval<Rat>(xy, Rat(1)) == rhs;
  }
  out.push_back(check(s, "addition theorem n<=7", ok));
  return out;
}

std::vector<CheckResult> tail_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  const std::vector<unsigned> ns = opt.n_max ? std::vector<unsigned>{*opt.n_max} : std::vector<unsigned>{5, 10, 20};
  for (unsigned a : a_values(opt, {2, 3, 4})) {
    for (unsigned n : ns) {
      const BigFix bound = tail_bound(a, n, 40);
      CheckResult c{"tail", "a=" + std::to_string(a) + " n=" + std::to_string(n) + " |u|<=" + std::to_string(a), true,
                    ""};
      for (int u = -static_cast<int>(a); u <= static_cast<int>(a) && c.pass; ++u) {
        const BigFix t = tail_series(a, u, n, 40).abs();
        if (t > bound) c = {c.suite, c.name, false, "u=" + std::to_string(u) + " tail " + t.to_string()};
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<CheckResult> saddle_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  const double n = opt.n_max ? static_cast<double>(*opt.n_max) : 1e6;
  for (unsigned a : a_values(opt, {2, 3, 4})) {
    for (int u = -static_cast<int>(a); u <= static_cast<int>(a); ++u) {
      CheckResult c{"saddle", "a=" + std::to_string(a) + " u=" + std::to_string(u), true, ""};
      try {
        const std::vector<SaddleRoot> roots = saddle_roots(a, u, n);
        const double sep = std::pow(n, -2.0 / a);
        for (std::size_t i = 0; i < roots.size() && c.pass; ++i) {
          const auto& r = roots[i];
          if (r.residual_over_n >= 1e-8) c = {c.suite, c.name, false, "residual " + std::to_string(r.residual_over_n)};
          else if (std::abs(r.root.value() - r.seed.value()) >= 1e-3)
            c = {c.suite, c.name, false, "seed far from root k=" + std::to_string(r.k)};
          for (std::size_t j = 0; j < i && c.pass; ++j)
            if (std::abs(r.root.value() - roots[j].root.value()) <= sep)
              c = {c.suite, c.name, false, "roots " + std::to_string(j) + "," + std::to_string(i) + " coincide"};
        }
        if (c.pass && roots.size() != a) c = {c.suite, c.name, false, "wrong root count"};
      } catch (const NewtonFailure& e) {
        c = {c.suite, c.name, false, e.what()};
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma1", "recurrences", "integrality", "bernoulli",
                                              "bell",   "tail",        "saddle"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt) {
  if (suite == "lemma1") return lemma1_suite(opt);
  if (suite == "recurrences") return recurrences_suite(opt);
  if (suite == "integrality") return integrality_suite(opt);
  if (suite == "bernoulli") return bernoulli_suite(opt);
  if (suite == "bell") return bell_suite(opt);
  if (suite == "tail") return tail_suite(opt);
  if (suite == "saddle") return saddle_suite(opt);
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace bellgamma
