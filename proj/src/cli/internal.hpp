// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include "hamform/cli/cli.hpp"
#include "hamform/exactmath/polynomial.hpp"
#include "hamform/exactmath/rational.hpp"

#include <toml.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hamform::cli {

using exact::BigInt;
using exact::Polynomial;
using exact::Rational;
using exact::RationalVector;

/// Typed access to a TOML table.  Every key must be consumed before
/// finish(), which rejects the leftovers.
class Reader {
 public:
  Reader(const toml::table& table, std::string context);

  bool has(const std::string& key) const;
  std::string string(const std::string& key);
  std::string string_or(const std::string& key, const std::string& fallback);
  bool boolean_or(const std::string& key, bool fallback);
  long integer(const std::string& key);
  long integer_or(const std::string& key, long fallback);
  /// Floats, integers and rational strings.
  double real(const std::string& key);
  std::optional<double> optional_real(const std::string& key);
  /// Integers or strings "p", "p/q"; TOML floats are refused.
  Rational rational(const std::string& key);
  RationalVector rationals(const std::string& key);
  std::vector<RationalVector> rational_rows(const std::string& key);
  std::vector<long> integers(const std::string& key);
  std::vector<double> reals(const std::string& key);
  std::vector<std::string> strings(const std::string& key);
  Reader table(const std::string& key);

  void finish() const;
  const std::string& context() const { return context_; }

 private:
  const toml::node& node(const std::string& key);
  [[noreturn]] void fail(const std::string& key, const std::string& what) const;
  Rational to_rational(const toml::node& n, const std::string& key) const;
  double to_real(const toml::node& n, const std::string& key) const;

  const toml::table* table_;
  std::string context_;
  std::set<std::string> used_;
};

struct Document {
  std::string path;
  toml::table table;
};

/// Throws UsageError when the file is unreadable or not valid TOML.
Document load_document(const std::string& path);

/// Accumulates checks, operation usage and the verdict of one command.
class Context {
 public:
  explicit Context(const RunConfig& config) : config_(config) {}

  const RunConfig& config() const { return config_; }
  double tol(const std::string& name) const;
  void op(const std::string& module, const std::string& name) { ++ops_[module][name]; }
  const std::map<std::string, std::map<std::string, int>>& ops() const { return ops_; }

  /// Records a check; residual and tolerance are optional.
  void check(const std::string& name, bool passed, std::optional<double> residual = std::nullopt,
             std::optional<double> tolerance = std::nullopt);
  Json& checks() { return checks_; }
  bool passed() const { return passed_; }

  /// Prefix for check names, e.g. the file of report-all.
  void set_scope(std::string scope) { scope_ = std::move(scope); }

 private:
  const RunConfig& config_;
  std::map<std::string, std::map<std::string, int>> ops_;
  Json checks_ = Json::array();
  bool passed_ = true;
  std::string scope_;
};

Json rational_json(const Rational& x);
Json rationals_json(const RationalVector& v);
Json polynomial_json(const Polynomial& p);
Json reals_json(const std::vector<double>& v);

/// Commands on a parsed document; each returns the command-specific result.
Json cmd_validate_polytope(Context& ctx, Reader& doc);
Json cmd_build_orthotoric(Context& ctx, Reader& doc);
Json cmd_check_compactify(Context& ctx, Reader& doc);
Json cmd_solve_wbf(Context& ctx, Reader& doc);
Json cmd_solve_wbf_preset(Context& ctx, const std::string& preset);
Json cmd_solve_extremal(Context& ctx, Reader& doc);
Json cmd_verify_curvature(Context& ctx, Reader& doc);
Json cmd_spectrum(Context& ctx, Reader& doc);

/// Commands that accept a document of the given kind.
std::vector<Command> commands_for_kind(const std::string& kind);

}  // namespace hamform::cli
