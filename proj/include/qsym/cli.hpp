#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/qnum.hpp"
#include "qsym/report.hpp"

namespace qsym::cli {

enum class Command { CharList, EvalQEuler, EvalLfun, EvalPowerSum, Verify };
enum class OutputFormat { Json, Csv, Pretty };

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

struct RunConfig {
  Command command = Command::CharList;
  std::int64_t d = 1;
  std::optional<int> chi;  // verify sweeps every character when unset
  int r = 1;
  int n = 0;
  int m = 0;
  int i = 0;
  std::optional<int> n_max;
  std::optional<int> m_max;
  std::int64_t upper = 1;
  double q = 0.5;
  double x = 0.0;
  double y = 0.0;
  Complex s{0.0, 0.0};
  int a = 1;
  int b = 1;
  std::optional<IdentityId> identity;
  double epsilon = 1e-10;
  std::size_t max_terms = 20000;
  std::optional<double> tolerance;  // overrides every identity's threshold
  OutputFormat output = OutputFormat::Pretty;
  std::optional<std::string> out_path;
  bool timings = false;
};

/// Bad flags or values; the CLI exits with kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses argv without the program name. All range checks of the downstream
/// modules (q in (0,1), odd d, odd a and b, i <= n, ...) are applied here.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes the command, writing records to `out` (or config.out_path) and
/// diagnostics to `err`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-code mapping.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace qsym::cli
