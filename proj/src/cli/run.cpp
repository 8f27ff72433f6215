// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "internal.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>

#ifndef HAMFORM_VERSION
#define HAMFORM_VERSION "0.0.0"
#endif
#ifndef HAMFORM_DATA_DIR
#define HAMFORM_DATA_DIR "data"
#endif

namespace hamform::cli {

namespace fs = std::filesystem;

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x == 0 ? 0.0 : x;
}

std::string data_dir() { return HAMFORM_DATA_DIR; }

const std::vector<std::pair<std::string, std::vector<std::string>>>& operation_catalog() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> catalog{
      {"exactmath", {"elem_sym", "poly_integrate_interval", "gauss_legendre", "hermite_normal_form", "real_roots"}},
      {"polytope",
       {"verify_delzant", "orthotoric_simplex", "dual_pairing_check", "ke_surface_polytope", "canonical_hessian",
        "check_toric_boundary"}},
      {"orthotoric",
       {"check_orthocompact", "fubini_study_profile", "bochner_flat_profile", "ke_surface_profiles", "orthotoric_H",
        "sigma_to_roots"}},
      {"geom",
       {"eval_metric", "eval_orthotoric_metric", "eval_line_bundle_metric", "curvature", "verify_hamiltonian",
        "verify_einstein", "verify_extremal", "momentum_spectrum"}},
      {"wbf",
       {"h_exact", "solve_B", "solve_wbf", "check_sign_conditions", "check_integrality", "solve_blowdown",
        "extremal_profile_l1", "bochner_flat_check"}},
      {"cli", {"run"}},
  };
  return catalog;
}

namespace {

Json dispatch(Context& ctx, Command cmd, Reader& doc) {
  switch (cmd) {
    case Command::ValidatePolytope: return cmd_validate_polytope(ctx, doc);
    case Command::BuildOrthotoric: return cmd_build_orthotoric(ctx, doc);
    case Command::CheckCompactify: return cmd_check_compactify(ctx, doc);
    case Command::SolveWbf: return cmd_solve_wbf(ctx, doc);
    case Command::SolveExtremal: return cmd_solve_extremal(ctx, doc);
    case Command::VerifyCurvature: return cmd_verify_curvature(ctx, doc);
    case Command::Spectrum: return cmd_spectrum(ctx, doc);
    case Command::ReportAll: break;
  }
  throw std::logic_error("dispatch: report-all has no single document");
}

Json run_document(Context& ctx, Command cmd, const Document& d, const std::string& label) {
  Reader doc(d.table, label);
  doc.string_or("name", "");
  auto out = dispatch(ctx, cmd, doc);
  doc.finish();
  return out;
}

Json report_all(Context& ctx) {
  const fs::path dir = ctx.config().input_path.empty() ? fs::path(data_dir()) : fs::path(ctx.config().input_path);
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw UsageError("report-all needs a directory, got '" + dir.string() + "'");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".toml") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw UsageError("no .toml files in '" + dir.string() + "'");

  Json runs = Json::array();
  for (const auto& f : files) {
    auto d = load_document(f.string());
    const auto* kind = d.table.get_as<std::string>("kind");
    if (!kind) throw UsageError(f.filename().string() + ": missing kind");
    auto cmds = commands_for_kind(kind->get());
    if (cmds.empty()) throw UsageError(f.filename().string() + ": unknown kind '" + kind->get() + "'");
    for (Command cmd : cmds) {
      const std::string label = f.filename().string();
      ctx.set_scope(label + ":" + to_string(cmd));
      const std::size_t before = ctx.checks().size();
      auto result = run_document(ctx, cmd, d, label);
      bool passed = true;
      for (std::size_t i = before; i < ctx.checks().size(); ++i) passed = passed && ctx.checks()[i]["passed"].get<bool>();
      Json entry;
      entry["file"] = label;
      entry["command"] = to_string(cmd);
      if (const auto* name = d.table.get_as<std::string>("name")) entry["name"] = name->get();
      entry["passed"] = passed;
      entry["result"] = std::move(result);
      runs.push_back(std::move(entry));
    }
  }
  ctx.set_scope("");

  Json coverage = Json::object(), missing = Json::array();
  for (const auto& [module, ops] : operation_catalog()) {
    Json m = Json::object();
    auto it = ctx.ops().find(module);
    for (const auto& op : ops) {
      int count = 0;
      if (it != ctx.ops().end())
        if (auto jt = it->second.find(op); jt != it->second.end()) count = jt->second;
      m[op] = count;
      if (count == 0) missing.push_back(module + "." + op);
    }
    coverage[module] = m;
  }
  ctx.check("operation_coverage", missing.empty());
  return {{"directory", dir.filename().string()}, {"runs", runs}, {"coverage", coverage}, {"missing", missing}};
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Json execute(const RunConfig& config) {
  if (config.samples < 1) throw UsageError("samples must be positive");
  if (!config.preset.empty() && config.command != Command::SolveWbf)
    throw UsageError("--preset applies to solve-wbf only");
  if (!config.preset.empty() && !config.input_path.empty())
    throw UsageError("give either --input or --preset, not both");

  Json report;
  report["tool"] = "hamform";
  report["version"] = HAMFORM_VERSION;
  report["command"] = to_string(config.command);
  Json echo;
  echo["input"] = config.input_path;
  echo["output"] = config.output_path;
  echo["seed"] = config.seed;
  echo["samples"] = config.samples;
  if (!config.preset.empty()) echo["preset"] = config.preset;
  Json tols = Json::object();
  for (const auto& [k, v] : config.tolerances) tols[k] = number(v);
  echo["tolerances"] = tols;
  report["config"] = echo;
  if (config.timestamp) report["timestamp"] = utc_timestamp();
  report["passed"] = false;

  Context ctx(config);
  ctx.op("cli", "run");
  Json result;
  if (config.command == Command::ReportAll) {
    result = report_all(ctx);
  } else if (!config.preset.empty()) {
    result = cmd_solve_wbf_preset(ctx, config.preset);
  } else {
    if (config.input_path.empty()) throw UsageError(std::string(to_string(config.command)) + " needs --input");
    auto d = load_document(config.input_path);
    result = run_document(ctx, config.command, d, fs::path(config.input_path).filename().string());
  }
  report["passed"] = ctx.passed();
  report["checks"] = ctx.checks();
  report["result"] = std::move(result);
  return report;
}

int run(const RunConfig& config, std::ostream& err) {
  Json report;
  try {
    report = execute(config);
  } catch (const UsageError& e) {
    err << "hamform: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "hamform: " << to_string(config.command) << " failed: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::string text = report.dump(2) + "\n";
  if (config.output_path.empty() || config.output_path == "-") {
    std::cout << text << std::flush;
  } else {
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out || !(out << text)) {
      err << "hamform: cannot write '" << config.output_path << "'\n";
      return kExitUsage;
    }
  }
  return report["passed"].get<bool>() ? kExitPass : kExitFail;
}

}  // namespace hamform::cli
