// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "hamform/cli/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <string>
#include <vector>

namespace {

using hamform::cli::UsageError;

double parse_tolerance(const std::string& name, const std::string& text) {
  double v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("--tol." + name + ": not a number: '" + text + "'");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hamform::cli;
  RunConfig config;

  // --tol.<name> value | --tol.<name>=value, pulled out before CLI11 sees them
  std::vector<std::pair<std::string, std::string>> tols;
  std::vector<char*> rest{argv[0]};
  try {
    for (int i = 1; i < argc; ++i) {
      std::string a = argv[i];
      if (a.rfind("--tol.", 0) != 0) {
        rest.push_back(argv[i]);
        continue;
      }
      std::string name = a.substr(6), value;
      if (auto eq = name.find('='); eq != std::string::npos) {
        value = name.substr(eq + 1);
        name.resize(eq);
      } else if (i + 1 < argc) {
        value = argv[++i];
      } else {
        throw UsageError(a + " needs a value");
      }
      tols.emplace_back(name, value);
    }
    for (const auto& [name, value] : tols) config.set_tolerance(name, parse_tolerance(name, value));
  } catch (const UsageError& e) {
    std::cerr << "hamform: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Hamiltonian 2-form toolkit: polytopes, orthotoric profiles, line-bundle ODEs and curvature checks"};
  app.set_version_flag("--version", HAMFORM_VERSION);
  std::string command;
  bool no_timestamp = false;
  std::string help_commands;
  for (const auto& c : command_names()) help_commands += (help_commands.empty() ? "" : ", ") + c;
  app.add_option("command", command, "One of: " + help_commands)->required();
  app.add_option("--input,-i", config.input_path, "Problem, polytope, profile or scene file (TOML)");
  app.add_option("--output,-o", config.output_path, "JSON report path (default: standard output)");
  app.add_option("--seed", config.seed, "Seed for sampled points");
  app.add_option("--samples", config.samples, "Number of sampled points")->check(CLI::PositiveNumber);
  app.add_option("--preset", config.preset, "Built-in solve-wbf problem, e.g. \"koiso-sakane 2 1\" or \"cp2xcp3\"");
  app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp so that reports are byte-identical");
  app.footer("Tolerances: --tol.<name> <value>, names: " + [&] {
    std::string s;
    for (const auto& [k, v] : RunConfig::default_tolerances()) s += (s.empty() ? "" : ", ") + k;
    return s;
  }());

  try {
    app.parse(static_cast<int>(rest.size()), rest.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  auto cmd = parse_command(command);
  if (!cmd) {
    std::cerr << "hamform: unknown command '" << command << "' (" << help_commands << ")\n";
    return kExitUsage;
  }
  config.command = *cmd;
  config.timestamp = !no_timestamp;
  return run(config, std::cerr);
}
