// The approximation sequences q_n, p_{n,mu} and the exact identities they satisfy.
#pragma once

#include "bellgamma/bigfix.hpp"
#include "bellgamma/numerics.hpp"
#include "bellgamma/symring.hpp"

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bellgamma {

/// H_k^(m) for k <= n_max, m <= m_max. Immutable after construction.
class HarmonicCache {
 public:
  HarmonicCache(unsigned n_max, unsigned m_max);

  /// H_k^(m); throws std::out_of_range outside the table.
  const Rat& operator()(unsigned k, unsigned m) const;
  unsigned n_max() const { return n_max_; }
  unsigned m_max() const { return m_max_; }

 private:
  unsigned n_max_;
  unsigned m_max_;
  std::vector<std::vector<Rat>> table_;  // [m-1][k]
};

/// H_k^(m) = sum_{j=1}^k j^-m, H_0^(m) = 0.
Rat harmonic(unsigned k, unsigned m);

/// r_m(k) = (m-1)! (a H_{n-k}^(m) + (-1)^m (a-1) H_k^(m)), 0 <= k <= n, m >= 1.
Rat r_val(unsigned a, unsigned n, unsigned k, unsigned m);
Rat r_val(const HarmonicCache& h, unsigned a, unsigned n, unsigned k, unsigned m);

/// q_n = sum_k binom(n,k)^a k!.
Integer q_value(unsigned a, unsigned n);
std::vector<Integer> q_seq(unsigned a, unsigned n_max);

/// p_{n,mu} = sum_k binom(n,k)^a k! Y_mu(r_1(k), ..., r_mu(k)).
Rat p_value(unsigned a, unsigned mu, unsigned n);
std::vector<Rat> p_seq(unsigned a, unsigned mu, unsigned n_max);

/// q_n and every p_{n,mu} (mu = 1..a-1) for n = 0..n_max in one pass.
struct ApproximantTable {
  unsigned a = 0;
  std::vector<Integer> q;
  std::vector<std::vector<Rat>> p;  ///< p[mu][n]; p[0] is unused and empty
};
ApproximantTable approximant_table(unsigned a, unsigned n_max);

/// D_n^mu p_{n,mu} is an integer.
bool integrality_check(unsigned a, unsigned mu, unsigned n);
bool integrality_check(const Rat& p, unsigned mu, unsigned n);

/// f^(m)(k) as a polynomial in g, z_m: -g + r_1(k) for m = 1, and
/// (m-1)! ((-1)^{m-1}(a-1) - a) z_m + r_m(k) for m >= 2.
SymPoly f_deriv_sym(unsigned a, unsigned n, unsigned k, unsigned m);

/// F_{n,mu} = sum_k k! binom(n,k)^a Y_mu(f'(k), ..., f^(mu)(k)), 0 <= mu <= a-1.
SymPoly F_sym(unsigned a, unsigned mu, unsigned n);
/// F_{n,0}..F_{n,a-1}.
std::vector<SymPoly> F_sym_all(unsigned a, unsigned n);

/// (p_{n,mu} - q_n alpha_mu) - sum_nu lambda_{mu,nu} F_{n,nu}; identically zero.
SymPoly lemma1_residual(unsigned a, unsigned mu, unsigned n);

/// Explicit Aptekarev sequences:
///   q~_n = sum_k binom(n,k)^2 (n+k)!,
///   p~_n = sum_k binom(n,k)^2 (n+k)! (H_{n+k} + 2 H_{n-k} - 2 H_k).
std::pair<std::vector<Integer>, std::vector<Rat>> aptekarev_seq(unsigned n_max);

/// (n+1)^-a sum_{k>=0} (-1)^{(u+1)k+a-1} k!^{a-1} / ((n+2)_k)^a to `digits`
/// decimal places; requires n >= 1 and |u| <= a.
BigFix tail_series(unsigned a, int u, unsigned n, unsigned digits);
/// e / (n+1)^a.
BigFix tail_bound(unsigned a, unsigned n, unsigned digits);

/// gamma and zeta(2..max_zeta) at one scale.
struct ReferenceConstants {
  unsigned digits = 0;
  BigFix gamma;
  std::vector<BigFix> zetas;  ///< zetas[i] = zeta(i + 2)
};
ReferenceConstants reference_constants(unsigned max_zeta, unsigned digits);

struct ApproxRecord {
  unsigned a = 0;
  unsigned mu = 0;
  unsigned n = 0;
  Rat p;
  Integer q;
  double err_log = 0;             ///< ln |alpha_mu - p/q|
  double predicted_exponent = 0;  ///< predicted log-error exponent at n
};

/// Working digits for a convergence measurement: ceil(-E / ln 10) + 30, E the
/// predicted decay exponent.
unsigned convergence_digits(unsigned a, unsigned n);

/// One convergence measurement. `digits == 0` selects convergence_digits.
/// The error is evaluated at `digits` and `digits + 10`; a disagreement beyond
/// 1e-6 in the log raises PrecisionError.
ApproxRecord convergence_row(unsigned a, unsigned mu, unsigned n, unsigned digits = 0);
/// Same, with constants supplied (lo at digits, hi at digits + 10).
ApproxRecord convergence_row(unsigned a, unsigned mu, unsigned n, const Rat& p, const Integer& q,
                             const ReferenceConstants& lo, const ReferenceConstants& hi);

/// p and q recomputed from their defining sums match the record.
bool verify_record(const ApproxRecord& r);

inline constexpr const char* kCsvHeader = "a,mu,n,p_num,p_den,q,err_log10,predicted_log10";

/// Six significant digits, as used by the log columns.
std::string format_log10(double ln_value);
void write_csv_header(std::ostream& out, bool with_qratio = false);
void write_csv_row(std::ostream& out, const ApproxRecord& r, std::optional<double> qratio = std::nullopt);
nlohmann::json to_json(const ApproxRecord& r, std::optional<double> qratio = std::nullopt);

}  // namespace bellgamma
