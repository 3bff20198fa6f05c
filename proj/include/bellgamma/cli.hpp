// Command-line front end. run_cli is the whole program; tools/bellgamma.cpp
// only forwards argv and the standard streams.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bellgamma::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsageError = 2, kPrecisionFailure = 3 };

enum class Command { Approx, Table, Verify, Constants, Asymptotics, Roots };
enum class Format { Csv, Json, Text };

/// Inclusive start:stop[:step].
struct NRange {
  unsigned start = 0;
  unsigned stop = 0;
  unsigned step = 1;
  std::vector<unsigned> values() const;
};

/// Throws std::invalid_argument on malformed or empty ranges.
NRange parse_n_range(const std::string& text);

inline constexpr unsigned kDefaultDigits = 50;
inline constexpr unsigned kMinA = 2;
inline constexpr unsigned kMaxA = 8;

/// BELLGAMMA_DIGITS if set and valid, else 50. Throws std::invalid_argument on
/// a malformed value.
unsigned default_digits();

struct RunConfig {
  Command command = Command::Approx;
  unsigned a = 3;
  std::optional<unsigned> mu;
  NRange n;
  std::optional<unsigned> digits;  ///< absent: per-row automatic precision
  Format format = Format::Text;
  std::optional<std::string> out_path;

  /// 2 <= a <= 8 and 1 <= mu < a; throws std::invalid_argument.
  void validate() const;
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bellgamma::cli
