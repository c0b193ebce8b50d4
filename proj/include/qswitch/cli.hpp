#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qswitch::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitEmptyBranch = 3;
inline constexpr int kExitIo = 4;

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Result of `qswitch run`.
struct RunReport {
  double omega_z = 0.0;
  double chi_ma = 0.0;
  double chi_nb = 0.0;
  double chi_mb = 0.0;
  double t = 0.0;
  std::string initial;  // "00", "01", "10" or "11"
  std::string sign;     // "plus" or "minus"
  double probability = 0.0;
  std::vector<double> state_re;  // row-major, 16 entries
  std::vector<double> state_im;
  double concurrence = 0.0;
  std::map<std::string, bool> checks;

  bool operator==(const RunReport&) const = default;
};

std::string to_json(const RunReport& r);
RunReport run_report_from_json(std::string_view text);

// "key value" lines; the state as four rows of "re im" pairs.
std::string to_text(const RunReport& r);
RunReport run_report_from_text(std::string_view text);

}  // namespace qswitch::cli
