// Linear recurrences with polynomial coefficients, as stated for the
// approximation sequences, and an exact verifier.
#pragma once

#include "bellgamma/numerics.hpp"
#include "bellgamma/polyq.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bellgamma {

/// sum_{i=0}^{order} coeffs[i](n) * f_{n + shift + i} = num(n) / den(n)
/// (right-hand side zero when homogeneous), asserted for every n >= n_min.
struct RecurrenceSpec {
  std::string name;
  std::string family;
  unsigned order = 0;
  int shift = 0;
  std::vector<PolyQ> coeffs;
  std::optional<std::pair<PolyQ, PolyQ>> inhomogeneous;
  long n_min = 0;
  /// Initial values of the sequences the relation is stated for, keyed by name.
  std::map<std::string, std::vector<Rat>> initial_values;

  const PolyQ& leading() const { return coeffs.back(); }
};

struct RecurrenceReport {
  bool holds = true;
  long checked = 0;
  std::vector<long> skipped;            ///< points with a vanishing leading coefficient
  std::optional<long> first_failure;
  explicit operator bool() const { return holds; }
};

/// Checks the relation at every n in [n_lo, n_hi] (clamped to n_min and to the
/// indices available in seq). Exact: both sides are multiplied by den(n).
RecurrenceReport recurrence_check(const RecurrenceSpec& spec, std::span<const Rat> seq, long n_lo, long n_hi);

/// Extends `initial` (which must hold the first order values) to n_max + 1
/// terms by solving for the highest-index term.
std::vector<Rat> solve_recurrence(const RecurrenceSpec& spec, std::span<const Rat> initial, unsigned n_max);

/// All recurrences quoted for the approximation sequences, keyed by name:
/// aptekarev, rivoal, a2-homogeneous, a2-inhomogeneous, a3-homogeneous,
/// a3-inhomogeneous, a4-homogeneous, a4-inhomogeneous.
std::map<std::string, RecurrenceSpec> make_paper_recurrences();

/// Rivoal's P_n, Q_n from the third-order recurrence and their initial values.
std::pair<std::vector<Rat>, std::vector<Rat>> rivoal_seq(unsigned n_max);

}  // namespace bellgamma
