// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "internal.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hamform::cli {

namespace {

constexpr std::array<std::pair<Command, const char*>, 8> kCommands{{
    {Command::ValidatePolytope, "validate-polytope"},
    {Command::BuildOrthotoric, "build-orthotoric"},
    {Command::CheckCompactify, "check-compactify"},
    {Command::SolveWbf, "solve-wbf"},
    {Command::SolveExtremal, "solve-extremal"},
    {Command::VerifyCurvature, "verify-curvature"},
    {Command::Spectrum, "spectrum"},
    {Command::ReportAll, "report-all"},
}};

}  // namespace

const char* to_string(Command c) {
  for (const auto& [cmd, name] : kCommands)
    if (cmd == c) return name;
  return "?";
}

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [cmd, n] : kCommands)
    if (name == n) return cmd;
  return std::nullopt;
}

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [cmd, n] : kCommands) out.emplace_back(n);
  return out;
}

std::map<std::string, double> RunConfig::default_tolerances() {
  return {
      {"geom.algebra", 1e-8},       {"geom.closedness", 1e-6}, {"geom.einstein", 1e-3},
      {"geom.extremal", 1e-3},      {"geom.hamiltonian", 1e-3}, {"geom.scalar", 1e-3},
      {"geom.spectrum", 1e-8},      {"orthotoric.hessian", 1e-10}, {"polytope.boundary", 1e-8},
      {"wbf.quadrature", 1e-12},    {"wbf.residual", 1e-10},
  };
}

void RunConfig::set_tolerance(const std::string& name, double value) {
  auto it = tolerances.find(name);
  if (it == tolerances.end()) throw UsageError("unknown tolerance '" + name + "'");
  if (!(value > 0) || !std::isfinite(value))
    throw UsageError("tolerance '" + name + "' must be a positive number");
  it->second = value;
}

// ---------------------------------------------------------------- Reader

Reader::Reader(const toml::table& table, std::string context) : table_(&table), context_(std::move(context)) {}

bool Reader::has(const std::string& key) const { return table_->contains(key); }

void Reader::fail(const std::string& key, const std::string& what) const {
  throw UsageError(context_ + ": key '" + key + "': " + what);
}

const toml::node& Reader::node(const std::string& key) {
  const toml::node* n = table_->get(key);
  if (!n) fail(key, "missing");
  used_.insert(key);
  return *n;
}

std::string Reader::string(const std::string& key) {
  const auto& n = node(key);
  if (!n.is_string()) fail(key, "expected a string");
  return n.as_string()->get();
}

std::string Reader::string_or(const std::string& key, const std::string& fallback) {
  return has(key) ? string(key) : fallback;
}

bool Reader::boolean_or(const std::string& key, bool fallback) {
  if (!has(key)) return fallback;
  const auto& n = node(key);
  if (!n.is_boolean()) fail(key, "expected true or false");
  return n.as_boolean()->get();
}

long Reader::integer(const std::string& key) {
  const auto& n = node(key);
  if (!n.is_integer()) fail(key, "expected an integer");
  return static_cast<long>(n.as_integer()->get());
}

long Reader::integer_or(const std::string& key, long fallback) { return has(key) ? integer(key) : fallback; }

Rational Reader::to_rational(const toml::node& n, const std::string& key) const {
  if (n.is_integer()) return Rational(static_cast<long>(n.as_integer()->get()));
  if (n.is_string()) {
    try {
      return Rational::parse(n.as_string()->get());
    } catch (const std::exception& e) {
      fail(key, std::string("not a rational: ") + e.what());
    }
  }
  fail(key, "expected an integer or a rational string \"p/q\"");
}

double Reader::to_real(const toml::node& n, const std::string& key) const {
  if (n.is_floating_point()) return n.as_floating_point()->get();
  return to_rational(n, key).to_double();
}

double Reader::real(const std::string& key) { return to_real(node(key), key); }

std::optional<double> Reader::optional_real(const std::string& key) {
  if (!has(key)) return std::nullopt;
  return real(key);
}

Rational Reader::rational(const std::string& key) { return to_rational(node(key), key); }

RationalVector Reader::rationals(const std::string& key) {
  const auto& n = node(key);
  if (!n.is_array()) fail(key, "expected an array");
  RationalVector out;
  for (const auto& e : *n.as_array()) out.push_back(to_rational(e, key));
  return out;
}

std::vector<RationalVector> Reader::rational_rows(const std::string& key) {
  const auto& n = node(key);
  if (!n.is_array()) fail(key, "expected an array of arrays");
  std::vector<RationalVector> out;
  for (const auto& row : *n.as_array()) {
    if (!row.is_array()) fail(key, "expected an array of arrays");
    RationalVector r;
    for (const auto& e : *row.as_array()) r.push_back(to_rational(e, key));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<long> Reader::integers(const std::string& key) {
  const auto& n = node(key);
  if (!n.is_array()) fail(key, "expected an array of integers");
  std::vector<long> out;
  for (const auto& e : *n.as_array()) {
    if (!e.is_integer()) fail(key, "expected an array of integers");
    out.push_back(static_cast<long>(e.as_integer()->get()));
  }
  return out;
}

std::vector<double> Reader::reals(const std::string& key) {
  const auto& n = node(key);
  if (!n.is_array()) fail(key, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& e : *n.as_array()) out.push_back(to_real(e, key));
  return out;
}

std::vector<std::string> Reader::strings(const std::string& key) {
  const auto& n = node(key);
  if (!n.is_array()) fail(key, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : *n.as_array()) {
    if (!e.is_string()) fail(key, "expected an array of strings");
    out.push_back(e.as_string()->get());
  }
  return out;
}

Reader Reader::table(const std::string& key) {
  const auto& n = node(key);
  if (!n.is_table()) fail(key, "expected a table");
  return Reader(*n.as_table(), context_ + "." + key);
}

void Reader::finish() const {
  for (const auto& [k, v] : *table_) {
    const std::string key(k.str());
    if (!used_.count(key)) throw UsageError(context_ + ": unknown key '" + key + "'");
  }
}

// ---------------------------------------------------------------- files

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Document doc;
  doc.path = path;
  try {
    doc.table = toml::parse(buf.str(), path);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << path << ":" << e.source().begin.line << ": " << e.description();
    throw UsageError(msg.str());
  }
  return doc;
}

// ---------------------------------------------------------------- context

double Context::tol(const std::string& name) const {
  auto it = config_.tolerances.find(name);
  if (it == config_.tolerances.end()) throw std::logic_error("no tolerance named " + name);
  return it->second;
}

void Context::check(const std::string& name, bool passed, std::optional<double> residual,
                    std::optional<double> tolerance) {
  Json c;
  if (!scope_.empty()) c["scope"] = scope_;
  c["name"] = name;
  c["passed"] = passed;
  if (residual) c["residual"] = number(*residual);
  if (tolerance) c["tolerance"] = number(*tolerance);
  checks_.push_back(std::move(c));
  passed_ = passed_ && passed;
}

}  // namespace hamform::cli
