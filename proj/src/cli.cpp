#include "bellgamma/cli.hpp"

#include "bellgamma/asymptotics.hpp"
#include "bellgamma/sequences.hpp"
#include "bellgamma/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace bellgamma::cli {

std::vector<unsigned> NRange::values() const {
  std::vector<unsigned> v;
  for (unsigned long n = start; n <= stop; n += step) v.push_back(static_cast<unsigned>(n));
  return v;
}

namespace {

unsigned parse_unsigned(const std::string& s, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  const unsigned long v = std::stoul(s);
  if (v > 1000000000UL) throw std::invalid_argument(std::string(what) + " too large: " + s);
  return static_cast<unsigned>(v);
}

}  // namespace

NRange parse_n_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (!text.empty() && text.back() == ':') parts.push_back("");
  if (parts.empty() || parts.size() > 3) throw std::invalid_argument("bad n range: '" + text + "'");
  NRange r;
  r.start = parse_unsigned(parts[0], "n");
  r.stop = parts.size() >= 2 ? parse_unsigned(parts[1], "n") : r.start;
  if (parts.size() == 3) r.step = parse_unsigned(parts[2], "step");
  if (r.step == 0) throw std::invalid_argument("n range step must be positive");
  if (r.stop < r.start) throw std::invalid_argument("empty n range: '" + text + "'");
  return r;
}

unsigned default_digits() {
  const char* env = std::getenv("BELLGAMMA_DIGITS");
  if (env == nullptr || *env == '\0') return kDefaultDigits;
  const unsigned d = parse_unsigned(env, "BELLGAMMA_DIGITS");
  if (d == 0 || d > kMaxConstantDigits) throw std::invalid_argument("BELLGAMMA_DIGITS out of range");
  return d;
}

void RunConfig::validate() const {
  if (a < kMinA || a > kMaxA) throw std::invalid_argument("a must be in 2..8, got " + std::to_string(a));
  if (mu && (*mu < 1 || *mu >= a))
    throw std::invalid_argument("mu must satisfy 1 <= mu < a, got mu=" + std::to_string(*mu));
}

namespace {

std::string g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string g6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::optional<double> q_ratio(unsigned a, unsigned n, const Integer& q) {
  if (n == 0) return std::nullopt;
  return std::exp(log_abs(q) - qn_log_asymptotic(a, n));
}

struct Row {
  ApproxRecord rec;
  std::optional<double> qratio;
};

Row compute_row(unsigned a, unsigned mu, unsigned n, std::optional<unsigned> digits, bool with_qratio) {
  Row r{convergence_row(a, mu, n, digits.value_or(0)), std::nullopt};
  if (with_qratio) r.qratio = q_ratio(a, n, r.rec.q);
  return r;
}

/// Rows computed on a small worker pool, returned in input order.
std::vector<Row> compute_rows(const RunConfig& cfg, bool with_qratio) {
  const std::vector<unsigned> ns = cfg.n.values();
  std::vector<Row> rows(ns.size());
  std::vector<std::exception_ptr> errors(ns.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ns.size();) {
      try {
        rows[i] = compute_row(cfg.a, *cfg.mu, ns[i], cfg.digits, with_qratio);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t nthreads = std::min<std::size_t>(hw, ns.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

void write_rows(std::ostream& out, const std::vector<Row>& rows, Format fmt, bool with_qratio) {
  switch (fmt) {
    case Format::Csv:
      write_csv_header(out, with_qratio);
      for (const auto& r : rows) {
        if (with_qratio && !r.qratio) {
          std::ostringstream line;
          write_csv_row(line, r.rec);
          std::string s = line.str();
          s.insert(s.size() - 1, ",");
          out << s;
        } else {
          write_csv_row(out, r.rec, with_qratio ? r.qratio : std::nullopt);
        }
      }
      break;
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows) {
        nlohmann::json j = to_json(r.rec, r.qratio);
        if (with_qratio && !r.qratio) j["q_ratio"] = nullptr;
        arr.push_back(j);
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::Text:
      out << std::left << std::setw(4) << "a" << std::setw(4) << "mu" << std::setw(8) << "n" << std::setw(14)
          << "err_log10" << std::setw(16) << "predicted_log10";
      if (with_qratio) out << std::setw(12) << "q_ratio";
      out << "p/q\n";
      for (const auto& r : rows) {
        out << std::setw(4) << r.rec.a << std::setw(4) << r.rec.mu << std::setw(8) << r.rec.n << std::setw(14)
            << format_log10(r.rec.err_log) << std::setw(16) << format_log10(r.rec.predicted_exponent);
        if (with_qratio) out << std::setw(12) << (r.qratio ? g6(*r.qratio) : "-");
        out << r.rec.p.get_str() << " / " << r.rec.q.get_str() << '\n';
      }
      break;
  }
}

int cmd_approx(const RunConfig& cfg, std::ostream& out) {
  const unsigned n = cfg.n.start;
  const ApproxRecord rec = convergence_row(cfg.a, *cfg.mu, n, cfg.digits.value_or(0));
  if (cfg.format != Format::Text) {
    write_rows(out, {Row{rec, std::nullopt}}, cfg.format, false);
    return kOk;
  }
  const unsigned digits = cfg.digits.value_or(convergence_digits(cfg.a, n));
  const ReferenceConstants c = reference_constants(symbol_count(cfg.a), digits);
  const SymPoly alpha = alpha_mu(cfg.a, *cfg.mu);
  out << "a = " << cfg.a << ", mu = " << *cfg.mu << ", n = " << n << '\n';
  out << "alpha = " << alpha.to_string() << '\n';
  out << "p = " << rec.p.get_str() << '\n';
  out << "q = " << rec.q.get_str() << '\n';
  out << "p/q = " << BigFix::from_rat(rec.p / Rat(rec.q), digits).to_string() << '\n';
  out << "alpha ~ " << sp_eval(alpha, c.gamma, c.zetas).to_string() << '\n';
  out << "err_log10 = " << format_log10(rec.err_log) << '\n';
  out << "predicted_log10 = " << format_log10(rec.predicted_exponent) << '\n';
  return kOk;
}

int cmd_table(const RunConfig& cfg, bool with_qratio, std::ostream& out) {
  write_rows(out, compute_rows(cfg, with_qratio), cfg.format, with_qratio);
  return kOk;
}

std::string sanitize_csv(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  return s;
}

int cmd_verify(const std::vector<std::string>& suites, const SuiteOptions& opt, Format fmt, std::ostream& out) {
  std::vector<CheckResult> results;
  for (const auto& s : suites) {
    auto r = run_suite(s, opt);
    results.insert(results.end(), r.begin(), r.end());
  }
  const bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.pass; });
  switch (fmt) {
    case Format::Text:
      for (const auto& c : results) {
        out << (c.pass ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << '\n';
      }
      out << (all ? "all checks passed" : "some checks FAILED") << " (" << results.size() << " checks)\n";
      break;
    case Format::Csv:
      out << "suite,check,pass,detail\n";
      for (const auto& c : results)
        out << c.suite << ',' << sanitize_csv(c.name) << ',' << (c.pass ? "true" : "false") << ','
            << sanitize_csv(c.detail) << '\n';
      break;
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : results)
        arr.push_back({{"suite", c.suite}, {"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      out << arr.dump(2) << '\n';
      break;
    }
  }
  return all ? kOk : kVerificationFailure;
}

int cmd_constants(unsigned digits, unsigned max_zeta, Format fmt, std::ostream& out) {
  if (max_zeta < 2) throw std::invalid_argument("--zeta-max must be >= 2");
  std::vector<std::pair<std::string, std::string>> vals;
  vals.emplace_back("gamma", gamma_const(digits).to_string());
  vals.emplace_back("pi", pi_const(digits).to_string());
  for (unsigned m = 2; m <= max_zeta; ++m) vals.emplace_back("zeta(" + std::to_string(m) + ")", zeta_const(m, digits).to_string());
  switch (fmt) {
    case Format::Text:
      for (const auto& [k, v] : vals) out << k << " = " << v << '\n';
      break;
    case Format::Csv:
      out << "name,value\n";
      for (const auto& [k, v] : vals) out << k << ',' << v << '\n';
      break;
    case Format::Json: {
      nlohmann::json j;
      j["digits"] = digits;
      for (const auto& [k, v] : vals) j[k] = v;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

ExponentKind parse_kind(const std::string& s) {
  for (ExponentKind k : {ExponentKind::LinearForm, ExponentKind::Qn, ExponentKind::Decay})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown kind: " + s);
}

int cmd_asymptotics(unsigned a, const std::string& kind, std::optional<unsigned> n, Format fmt, std::ostream& out) {
  std::vector<ExponentKind> kinds;
  if (kind == "all") kinds = {ExponentKind::LinearForm, ExponentKind::Qn, ExponentKind::Decay};
  else kinds = {parse_kind(kind)};
  nlohmann::json arr = nlohmann::json::array();
  for (ExponentKind k : kinds) {
    const ExponentProfile p = exponent_profile(a, k);
    nlohmann::json j = to_json(p);
    if (n) {
      const double dn = *n;
      double v = 0;
      if (k == ExponentKind::LinearForm) v = linform_exponent(a, dn);
      else if (k == ExponentKind::Decay) v = corollary_exponent(a, dn);
      else v = *n >= 1 ? qn_log_asymptotic(a, *n) : std::nan("");
      j["n"] = *n;
      j["value"] = std::stod(g17(v));
    }
    arr.push_back(j);
  }
  switch (fmt) {
    case Format::Json:
      out << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
      break;
    case Format::Text:
    case Format::Csv:
      if (fmt == Format::Csv) out << "a,kind,m,b_m,coefficient\n";
      for (const auto& j : arr) {
        const auto& b = j["b"];
        for (std::size_t m = 0; m < b.size(); ++m) {
          const std::string coef =
              j.contains("coefficients") && m < j["coefficients"].size() ? j["coefficients"][m].get<std::string>() : "";
          if (fmt == Format::Csv)
            out << a << ',' << j["kind"].get<std::string>() << ',' << m + 1 << ',' << b[m].get<std::string>() << ','
                << coef << '\n';
          else
            out << j["kind"].get<std::string>() << " a=" << a << " m=" << m + 1 << " b=" << b[m].get<std::string>()
                << (coef.empty() ? "" : " coefficient=" + coef) << '\n';
        }
        if (fmt == Format::Text && j.contains("value"))
          out << j["kind"].get<std::string>() << " value at n=" << j["n"] << ": " << g17(j["value"].get<double>())
              << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_roots(unsigned a, int u, double n, Format fmt, std::ostream& out) {
  const std::vector<SaddleRoot> roots = saddle_roots(a, u, n);
  switch (fmt) {
    case Format::Csv:
      out << "k,seed_re,seed_im,root_re,root_im,residual_over_n,iterations\n";
      for (const auto& r : roots)
        out << r.k << ',' << g17(r.seed.re) << ',' << g17(r.seed.im) << ',' << g17(r.root.re) << ','
            << g17(r.root.im) << ',' << g6(r.residual_over_n) << ',' << r.iterations << '\n';
      break;
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : roots)
        arr.push_back({{"k", r.k},
                       {"seed", {r.seed.re, r.seed.im}},
                       {"root", {r.root.re, r.root.im}},
                       {"residual_over_n", r.residual_over_n},
                       {"iterations", r.iterations}});
      out << nlohmann::json{{"a", a}, {"u", u}, {"n", n}, {"roots", arr}}.dump(2) << '\n';
      break;
    }
    case Format::Text:
      for (const auto& r : roots)
        out << "tau_" << r.k << " = " << g17(r.root.re) << (r.root.im < 0 ? " - " : " + ") << g17(std::fabs(r.root.im))
            << "i  |p|/n = " << g6(r.residual_over_n) << '\n';
      break;
  }
  return kOk;
}

std::optional<unsigned> resolve_digits(const std::string& opt) {
  if (opt == "auto") return std::nullopt;
  if (opt.empty()) return default_digits();
  const unsigned d = parse_unsigned(opt, "digits");
  if (d == 0 || d > kMaxConstantDigits) throw std::invalid_argument("digits must be in 1..10000");
  return d;
}

Format parse_format(const std::string& s, Format fallback) {
  if (s.empty()) return fallback;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  throw std::invalid_argument("unknown format: " + s);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational approximations to Bell-polynomial combinations of Euler's constant and zeta values",
               "bellgamma"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_opt, out_opt, digits_opt;
  app.add_option("--format", format_opt, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--out", out_opt, "write output to this file instead of stdout");
  app.add_option("--digits", digits_opt,
                 "working precision in decimal digits, or 'auto' (default: $BELLGAMMA_DIGITS or 50)");

  unsigned a = 3, mu = 1;
  std::string n_opt;
  bool qratio = false;

  auto* approx = app.add_subcommand("approx", "one approximation p_{n,mu}/q_n and its error");
  approx->add_option("--a", a, "order a, 2..8")->required();
  approx->add_option("--mu", mu, "index mu, 1..a-1")->required();
  approx->add_option("--n", n_opt, "index n")->required();

  auto* table = app.add_subcommand("table", "convergence table over an n range");
  table->add_option("--a", a, "order a, 2..8")->required();
  table->add_option("--mu", mu, "index mu, 1..a-1")->required();
  table->add_option("--n", n_opt, "inclusive range start:stop[:step]")->required();
  table->add_flag("--qratio", qratio, "append q_n / asymptotic main term");

  std::vector<std::string> suites;
  unsigned nmax = 0;
  auto* verify = app.add_subcommand("verify", "run exact and numeric verification suites");
  verify->add_option("--suite", suites, "suite name (repeatable; default all)")->check(CLI::IsMember(suite_names()));
  auto* verify_a = verify->add_option("--a", a, "restrict to one a");
  auto* verify_nmax = verify->add_option("--nmax", nmax, "upper end of the n range");

  unsigned zeta_max = 5;
  auto* constants = app.add_subcommand("constants", "gamma, pi and zeta(2..M) to the working precision");
  constants->add_option("--zeta-max", zeta_max, "largest zeta argument (default 5)");

  std::string kind = "all";
  unsigned asym_n = 0;
  auto* asymptotics = app.add_subcommand("asymptotics", "coefficients b_m(a) and the exponent profiles");
  asymptotics->add_option("--a", a, "order a, 2..8")->required();
  asymptotics->add_option("--kind", kind, "theorem-linear-form, theorem-qn, corollary or all");
  auto* asym_n_opt = asymptotics->add_option("--n", asym_n, "also evaluate at this n");

  int u = 0;
  double roots_n = 1e6;
  auto* roots = app.add_subcommand("roots", "saddle-point roots of e^{i pi u} n (t-1)^a - t^{a-1}");
  roots->add_option("--a", a, "order a, 2..8")->required();
  roots->add_option("--u", u, "integer u with |u| <= a");
  roots->add_option("--n", roots_n, "n >= 1000 (default 1e6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    RunConfig cfg;
    cfg.a = a;
    cfg.out_path = out_opt.empty() ? std::nullopt : std::optional<std::string>(out_opt);
    if (*approx || *table) {
      cfg.command = *approx ? Command::Approx : Command::Table;
      cfg.mu = mu;
      cfg.n = parse_n_range(n_opt);
      if (*approx && cfg.n.stop != cfg.n.start) throw std::invalid_argument("approx takes a single n");
      cfg.digits = resolve_digits(digits_opt);
      cfg.format = parse_format(format_opt, *approx ? Format::Text : Format::Csv);
      cfg.validate();
      code = *approx ? cmd_approx(cfg, buffer) : cmd_table(cfg, qratio, buffer);
    } else if (*verify) {
      SuiteOptions opt;
      if (*verify_a) {
        cfg.validate();
        opt.a = a;
      }
      if (*verify_nmax) opt.n_max = nmax;
      if (suites.empty()) suites = suite_names();
      code = cmd_verify(suites, opt, parse_format(format_opt, Format::Text), buffer);
    } else if (*constants) {
      const std::optional<unsigned> d = resolve_digits(digits_opt);
      if (!d) throw std::invalid_argument("constants needs an explicit digit count");
      code = cmd_constants(*d, zeta_max, parse_format(format_opt, Format::Text), buffer);
    } else if (*asymptotics) {
      cfg.validate();
      code = cmd_asymptotics(a, kind, *asym_n_opt ? std::optional<unsigned>(asym_n) : std::nullopt,
                             parse_format(format_opt, Format::Json), buffer);
    } else if (*roots) {
      cfg.validate();
      code = cmd_roots(a, u, roots_n, parse_format(format_opt, Format::Text), buffer);
    }
  } catch (const PrecisionError& e) {
    err << "precision failure: " << e.what() << '\n';
    return kPrecisionFailure;
  } catch (const NewtonFailure& e) {
    err << "precision failure: " << e.what() << '\n';
    return kPrecisionFailure;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPrecisionFailure;
  }

  if (out_opt.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(out_opt, std::ios::binary);
    if (!f) {
      err << "usage error: cannot open " << out_opt << " for writing\n";
      return kUsageError;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace bellgamma::cli
