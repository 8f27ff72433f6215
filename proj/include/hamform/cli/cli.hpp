// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hamform::cli {

using Json = nlohmann::ordered_json;

enum class Command {
  ValidatePolytope,
  BuildOrthotoric,
  CheckCompactify,
  SolveWbf,
  SolveExtremal,
  VerifyCurvature,
  Spectrum,
  ReportAll,
};

const char* to_string(Command c);
std::optional<Command> parse_command(std::string_view name);
std::vector<std::string> command_names();

/// Bad input or usage; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::ReportAll;
  std::string input_path;   ///< empty: preset (solve-wbf) or the bundled corpus (report-all)
  std::string output_path;  ///< empty or "-": standard output
  std::uint64_t seed = 0;
  int samples = 10;
  std::map<std::string, double> tolerances = default_tolerances();
  std::string preset;
  bool timestamp = true;

  static std::map<std::string, double> default_tolerances();
  /// Overrides one tolerance; throws UsageError for unknown names or
  /// non-positive values.
  void set_tolerance(const std::string& name, double value);
};

/// Exit codes.
inline constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2;

/// Directory of the bundled example corpus.
std::string data_dir();

/// Every operation the modules export, grouped by module, in report order.
const std::vector<std::pair<std::string, std::vector<std::string>>>& operation_catalog();

/// Runs the command and returns the report.  Throws UsageError on input
/// errors.  report["passed"] holds the overall verdict.
Json execute(const RunConfig& config);

/// Executes, writes the report and maps the verdict to an exit code.
/// Errors go to `err`.
int run(const RunConfig& config, std::ostream& err);

/// Shortest round-trip form (at most 17 significant digits); non-finite
/// values become null and -0 becomes 0.
Json number(double x);

}  // namespace hamform::cli
