// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "internal.hpp"

#include "hamform/exactmath/lattice.hpp"
#include "hamform/exactmath/quadrature.hpp"
#include "hamform/geom/checks.hpp"
#include "hamform/geom/curvature.hpp"
#include "hamform/geom/metric.hpp"
#include "hamform/orthotoric/profile.hpp"
#include "hamform/polytope/boundary.hpp"
#include "hamform/polytope/hessian.hpp"
#include "hamform/polytope/polytope.hpp"
#include "hamform/wbf/extremal.hpp"
#include "hamform/wbf/wbf.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>

namespace hamform::cli {

namespace polytope = hamform::polytope;
namespace orthotoric = hamform::orthotoric;
namespace geom = hamform::geom;
namespace wbf = hamform::wbf;

Json rational_json(const Rational& x) { return x.str(); }

Json rationals_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json polynomial_json(const Polynomial& p) { return rationals_json(p.coefficients()); }

Json reals_json(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

namespace {

Json bigints_json(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json real_polynomial_json(const exact::RealPolynomial& p) { return reals_json(p.coefficients()); }

// %.17g, locale independent
Json decimal_strings(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) {
    char buf[40];
    auto r = std::to_chars(buf, buf + sizeof buf, x == 0 ? 0.0 : x, std::chars_format::general, 17);
    a.push_back(std::string(buf, r.ptr));
  }
  return a;
}

Json vector_json(const Eigen::VectorXd& v) {
  return reals_json(std::vector<double>(v.data(), v.data() + v.size()));
}

Json int_matrix_json(const exact::IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<BigInt> to_bigints(const std::vector<long>& v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

void require_kind(Reader& doc, Command cmd, std::initializer_list<const char*> kinds) {
  const std::string kind = doc.string("kind");
  for (const char* k : kinds)
    if (kind == k) return;
  std::string want;
  for (const char* k : kinds) want += (want.empty() ? "" : " or ") + std::string("\"") + k + "\"";
  throw UsageError(doc.context() + ": " + to_string(cmd) + " expects kind = " + want + ", got \"" + kind + "\"");
}

/// Runs a library call, turning argument errors into usage errors.
template <class F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(what + ": " + e.what());
  } catch (const polytope::PolytopeError& e) {
    throw UsageError(what + ": " + e.what());
  }
}

// ---------------------------------------------------------------- profiles

struct ProfileInput {
  std::string builder;
  orthotoric::BuiltProfile built;
  std::optional<Rational> c;  ///< scale of a single-Theta profile, for the CP bound
  std::optional<exact::IntegerLattice> lattice;
  Json extra = Json::object();
};

ProfileInput read_profile(Context& ctx, Reader& r) {
  ProfileInput in;
  in.builder = r.string("builder");
  if (in.builder == "fubini-study") {
    auto betas = r.rationals("betas");
    in.c = r.rational("c");
    in.built = guarded("fubini_study_profile", [&] { return orthotoric::fubini_study_profile(betas, *in.c); });
    ctx.op("orthotoric", "fubini_study_profile");
  } else if (in.builder == "bochner-flat") {
    auto weights = to_bigints(r.integers("weights"));
    in.c = r.rational("c");
    auto beta = r.rational("beta");
    in.built = guarded("bochner_flat_profile", [&] {
      return orthotoric::bochner_flat_profile(orthotoric::WeightedProjectiveTag(weights), *in.c, beta);
    });
    ctx.op("orthotoric", "bochner_flat_profile");
  } else if (in.builder == "ke-surface") {
    auto p = r.rational("p"), q = r.rational("q");
    auto ke = guarded("ke_surface_profiles", [&] { return orthotoric::ke_surface_profiles(p, q); });
    in.built = ke.built;
    in.extra["C"] = rational_json(ke.C);
    in.extra["P1"] = polynomial_json(ke.P1);
    in.extra["P2"] = polynomial_json(ke.P2);
    ctx.op("orthotoric", "ke_surface_profiles");
  } else if (in.builder == "explicit") {
    auto intervals = r.rational_rows("intervals");
    auto theta = r.rational_rows("theta");
    auto& prof = in.built.profile;
    for (const auto& iv : intervals) {
      if (iv.size() != 2) throw UsageError(r.context() + ": each interval needs two endpoints");
      prof.intervals.emplace_back(iv[0], iv[1]);
    }
    for (const auto& t : theta) prof.theta.emplace_back(t);
    prof.single_theta = r.boolean_or("single", false);
    if (prof.single_theta && prof.theta.size() == 1) prof.theta.assign(prof.intervals.size(), prof.theta.front());
    if (prof.theta.size() != prof.intervals.size())
      throw UsageError(r.context() + ": need one Theta per interval");
    in.built.labels.alpha = r.rationals("labels_alpha");
    in.built.labels.beta = r.rationals("labels_beta");
    if (in.built.labels.alpha.size() != prof.m() || in.built.labels.beta.size() != prof.m())
      throw UsageError(r.context() + ": need one label per interval end");
    if (r.has("c")) in.c = r.rational("c");
    if (r.has("weights")) in.built.weights = to_bigints(r.integers("weights"));
    guarded("profile", [&] {
      prof.validate();
      return 0;
    });
  } else {
    throw UsageError(r.context() + ": unknown builder '" + in.builder +
                     "' (fubini-study, bochner-flat, ke-surface, explicit)");
  }
  const std::string lattice = r.string_or("lattice", "normals");
  if (lattice == "standard")
    in.lattice = exact::IntegerLattice::standard(in.built.profile.m());
  else if (lattice != "normals")
    throw UsageError(r.context() + ": lattice must be \"normals\" or \"standard\"");
  return in;
}

Json profile_json(const ProfileInput& in) {
  const auto& prof = in.built.profile;
  Json j;
  j["builder"] = in.builder;
  Json iv = Json::array(), th = Json::array();
  for (std::size_t i = 0; i < prof.m(); ++i) {
    iv.push_back({prof.intervals[i].first.str(), prof.intervals[i].second.str()});
    th.push_back(polynomial_json(prof.theta[i]));
  }
  j["intervals"] = iv;
  j["theta"] = th;
  j["single_theta"] = prof.single_theta;
  j["labels_alpha"] = rationals_json(in.built.labels.alpha);
  j["labels_beta"] = rationals_json(in.built.labels.beta);
  if (!in.built.weights.empty()) j["weights"] = bigints_json(in.built.weights);
  if (in.c) j["c"] = rational_json(*in.c);
  for (const auto& [k, v] : in.extra.items()) j[k] = v;
  return j;
}

Json orthocompact_json(const orthotoric::OrthocompactReport& r) {
  Json j;
  j["passed"] = r.passed;
  Json eps = Json::array();
  for (const auto& e : r.endpoints) {
    eps.push_back({{"interval", e.interval},
                   {"end", e.at_alpha ? "alpha" : "beta"},
                   {"endpoint", e.endpoint.str()},
                   {"value", e.value.str()},
                   {"derivative", e.derivative.str()},
                   {"label", e.label.str()},
                   {"signed_product", e.signed_product.str()},
                   {"unsigned_product", e.unsigned_product.str()},
                   {"passed", e.passed}});
  }
  j["endpoints"] = eps;
  j["interval_positive"] = r.interval_positive;
  j["shared_labels_consistent"] = r.shared_labels_consistent;
  j["junctions_smooth"] = r.junctions_smooth;
  j["signs_consistent"] = r.signs_consistent;
  j["failures"] = r.failures;
  return j;
}

std::vector<geom::ChartPoint> sample(const geom::CalabiData& data, const RunConfig& cfg, int minimum = 1) {
  return geom::sample_points(data, std::max(cfg.samples, minimum), cfg.seed);
}

Json boundary_json(const polytope::ToricBoundaryReport& r) {
  return {{"exact", r.exact},
          {"passed", r.passed},
          {"max_vanishing_residual", number(r.max_vanishing_residual)},
          {"max_derivative_residual", number(r.max_derivative_residual)},
          {"factor_min", number(r.factor_min)},
          {"factor_max", number(r.factor_max)},
          {"faces", r.faces.size()}};
}

polytope::ToricBoundaryReport boundary_check(Context& ctx, const polytope::HessianField& field,
                                             const polytope::RationalDelzantPolytope& P) {
  polytope::BoundaryOptions o;
  o.tol = ctx.tol("polytope.boundary");
  ctx.op("polytope", "check_toric_boundary");
  auto r = polytope::check_toric_boundary(field, P, o);
  if (!r.exact && !r.passed) {
    // finite differences: the one-sided stencil limits accuracy
    o.tol = std::max(o.tol, 1e-6);
    r = polytope::check_toric_boundary(field, P, o);
  }
  return r;
}

Json polytope_json(const polytope::RationalDelzantPolytope& P, const polytope::PolytopeReport& rep) {
  Json j;
  j["dim"] = P.dim();
  j["facets"] = P.facets();
  Json normals = Json::array();
  for (const auto& u : P.normals()) normals.push_back(rationals_json(u));
  j["normals"] = normals;
  j["offsets"] = rationals_json(P.offsets());
  j["lattice"] = {{"basis", int_matrix_json(P.lattice().integer_basis())},
                  {"denominator", P.lattice().denominator().get_str()}};
  j["is_rational_delzant"] = rep.is_rational_delzant;
  j["is_integral_delzant"] = rep.is_integral_delzant;
  j["labels"] = bigints_json(rep.labels);
  Json verts = Json::array();
  for (const auto& v : rep.vertices) verts.push_back({{"point", rationals_json(v.point)}, {"active", v.active}});
  j["vertices"] = verts;
  Json viol = Json::array();
  for (const auto& v : rep.violations)
    viol.push_back({{"kind", v.kind}, {"detail", v.detail}, {"normals", v.normals}});
  j["violations"] = viol;
  return j;
}

}  // namespace

// ---------------------------------------------------------------- validate-polytope

Json cmd_validate_polytope(Context& ctx, Reader& doc) {
  require_kind(doc, Command::ValidatePolytope, {"polytope"});
  const std::string construction = doc.string_or("construction", "explicit");
  std::optional<polytope::RationalDelzantPolytope> P;
  RationalVector betas;
  Rational c;
  bool unit_labels = false;
  if (construction == "explicit") {
    auto normals = doc.rational_rows("normals");
    auto offsets = doc.rationals("offsets");
    std::optional<exact::IntegerLattice> lattice;
    if (doc.has("lattice")) {
      auto basis = doc.rational_rows("lattice");
      lattice = guarded("lattice", [&] { return exact::IntegerLattice::from_basis(basis); });
    }
    P = guarded("polytope", [&] { return polytope::RationalDelzantPolytope(normals, offsets, lattice); });
  } else if (construction == "orthotoric-simplex") {
    betas = doc.rationals("betas");
    c = doc.rational("c");
    auto labels = doc.has("labels") ? to_bigints(doc.integers("labels")) : std::vector<BigInt>(betas.size(), 1);
    unit_labels = std::all_of(labels.begin(), labels.end(), [](const BigInt& n) { return n == 1; });
    P = guarded("orthotoric_simplex", [&] { return polytope::orthotoric_simplex(betas, labels, c); });
    ctx.op("polytope", "orthotoric_simplex");
  } else if (construction == "ke-surface") {
    auto p = doc.rational("p"), q = doc.rational("q");
    P = guarded("ke_surface_polytope", [&] { return polytope::ke_surface_polytope(p, q); });
    ctx.op("polytope", "ke_surface_polytope");
  } else {
    throw UsageError(doc.context() + ": unknown construction '" + construction +
                     "' (explicit, orthotoric-simplex, ke-surface)");
  }
  const bool expect_integral = doc.boolean_or("expect_integral", true);
  const bool boundary = doc.boolean_or("boundary", true);
  std::optional<Rational> boundary_scale;
  if (doc.has("boundary_scale")) boundary_scale = doc.rational("boundary_scale");
  doc.finish();

  auto rep = polytope::verify_delzant(*P);
  ctx.op("polytope", "verify_delzant");
  Json out;
  out["construction"] = construction;
  out["is_rational_delzant"] = rep.is_rational_delzant;
  out["is_integral_delzant"] = rep.is_integral_delzant;
  out["polytope"] = polytope_json(*P, rep);
  ctx.check("rational_delzant", rep.is_rational_delzant);
  if (expect_integral) ctx.check("integral_delzant", rep.is_integral_delzant);

  // The stored lattice basis is already in Hermite normal form.
  {
    const auto& B = P->lattice().integer_basis();
    auto hnf = exact::hermite_normal_form(B);
    ctx.op("exactmath", "hermite_normal_form");
    bool same = hnf.rank == B.rows();
    for (std::size_t i = 0; same && i < B.rows(); ++i)
      for (std::size_t j = 0; j < B.cols(); ++j) same = same && hnf.H(i, j) == B(i, j);
    ctx.check("lattice_basis_reduced", same);
  }

  if (boundary && rep.is_rational_delzant) {
    auto field = polytope::canonical_hessian(*P);
    ctx.op("polytope", "canonical_hessian");
    auto b = boundary_check(ctx, field, *P);
    out["boundary"] = boundary_json(b);
    ctx.check("toric_boundary", b.passed, std::max(b.max_vanishing_residual, b.max_derivative_residual),
              ctx.tol("polytope.boundary"));
    if (boundary_scale) {
      auto bad = boundary_check(ctx, field.scaled(*boundary_scale), *P);
      out["scaled_boundary"] = boundary_json(bad);
      out["scaled_boundary"]["scale"] = rational_json(*boundary_scale);
      const double s = boundary_scale->to_double();
      const double dev = std::max(std::abs(bad.factor_min - s), std::abs(bad.factor_max - s));
      ctx.check("scaled_boundary_detected", !bad.passed && dev <= 1e-9, dev, 1e-9);
    }
  }

  if (construction == "orthotoric-simplex") {
    auto dual = guarded("dual_pairing_check", [&] { return polytope::dual_pairing_check(betas, c); });
    ctx.op("polytope", "dual_pairing_check");
    Json gens = Json::array();
    for (const auto& g : dual.generators) gens.push_back(rationals_json(g));
    out["dual_pairing"] = {{"generators", gens}, {"passed", dual.passed}};
    ctx.check("dual_pairing", dual.passed);

    if (unit_labels) {
      // the inverse canonical Hessian is the Fubini-Study orthotoric H
      auto fs = orthotoric::fubini_study_profile(betas, c);
      ctx.op("orthotoric", "fubini_study_profile");
      auto field = polytope::canonical_hessian(*P);
      ctx.op("polytope", "canonical_hessian");
      auto data = geom::orthotoric_data(fs.profile);
      double worst = 0;
      for (const auto& pt : sample(data, ctx.config())) {
        auto sig = orthotoric::roots_to_sigma(pt.xi);
        Eigen::VectorXd s = Eigen::Map<Eigen::VectorXd>(sig.data(), static_cast<Eigen::Index>(sig.size()));
        Eigen::MatrixXd H0 = field.H(s), H = orthotoric::orthotoric_H(fs.profile, pt.xi);
        worst = std::max(worst, (H0 - H).cwiseAbs().maxCoeff() / (1 + H0.cwiseAbs().maxCoeff()));
      }
      ctx.op("orthotoric", "orthotoric_H");
      out["canonical_vs_orthotoric"] = number(worst);
      ctx.check("canonical_equals_orthotoric", worst <= ctx.tol("orthotoric.hessian"), worst,
                ctx.tol("orthotoric.hessian"));
    }
  }
  return out;
}

// ---------------------------------------------------------------- build-orthotoric

Json cmd_build_orthotoric(Context& ctx, Reader& doc) {
  require_kind(doc, Command::BuildOrthotoric, {"profile"});
  auto in = read_profile(ctx, doc);
  if (doc.has("expect_bochner_flat")) doc.boolean_or("expect_bochner_flat", false);  // read by check-compactify
  doc.finish();
  const auto& prof = in.built.profile;
  Json out;
  out["profile"] = profile_json(in);

  auto oc = orthotoric::check_orthocompact(prof, in.built.labels);
  ctx.op("orthotoric", "check_orthocompact");
  ctx.check("orthocompact", oc.passed);

  auto P = guarded("orthotoric_polytope",
                   [&] { return orthotoric::orthotoric_polytope(prof, in.built.labels, in.lattice); });
  auto rep = polytope::verify_delzant(P);
  ctx.op("polytope", "verify_delzant");
  out["polytope"] = polytope_json(P, rep);
  ctx.check("rational_delzant", rep.is_rational_delzant);

  // H positive on the interior, sigma <-> xi round trip
  auto data = geom::orthotoric_data(prof);
  double min_eig = std::numeric_limits<double>::infinity(), roundtrip = 0;
  Json samples = Json::array();
  for (const auto& pt : sample(data, ctx.config())) {
    Eigen::MatrixXd H = orthotoric::orthotoric_H(prof, pt.xi);
    min_eig = std::min(min_eig, Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(H).eigenvalues().minCoeff());
    auto es = exact::elem_sym<double>(pt.xi);
    auto sig = orthotoric::roots_to_sigma(pt.xi);
    for (std::size_t r = 0; r < sig.size(); ++r) roundtrip = std::max(roundtrip, std::abs(es[r + 1] - sig[r]));
    auto back = orthotoric::sigma_to_roots(sig, prof);
    for (std::size_t j = 0; j < back.size(); ++j) roundtrip = std::max(roundtrip, std::abs(back[j] - pt.xi[j]));
    samples.push_back({{"xi", reals_json(pt.xi)}, {"sigma", reals_json(sig)}});
  }
  ctx.op("orthotoric", "orthotoric_H");
  ctx.op("orthotoric", "sigma_to_roots");
  ctx.op("exactmath", "elem_sym");
  out["samples"] = samples;
  out["min_hessian_eigenvalue"] = number(min_eig);
  out["sigma_roundtrip"] = number(roundtrip);
  ctx.check("hessian_positive", min_eig > 0, min_eig);
  ctx.check("sigma_roundtrip", roundtrip <= ctx.tol("orthotoric.hessian"), roundtrip, ctx.tol("orthotoric.hessian"));

  if (rep.is_rational_delzant) {
    auto b = boundary_check(ctx, orthotoric::orthotoric_hessian_field(prof), P);
    out["boundary"] = boundary_json(b);
    ctx.check("toric_boundary", b.passed, std::max(b.max_vanishing_residual, b.max_derivative_residual));
  }
  return out;
}

// ---------------------------------------------------------------- check-compactify

Json cmd_check_compactify(Context& ctx, Reader& doc) {
  require_kind(doc, Command::CheckCompactify, {"profile"});
  auto in = read_profile(ctx, doc);
  std::optional<bool> expect_bf;
  if (doc.has("expect_bochner_flat")) expect_bf = doc.boolean_or("expect_bochner_flat", false);
  doc.finish();
  const auto& prof = in.built.profile;
  Json out;
  out["profile"] = profile_json(in);

  auto oc = orthotoric::check_orthocompact(prof, in.built.labels);
  ctx.op("orthotoric", "check_orthocompact");
  out["orthocompact"] = orthocompact_json(oc);
  ctx.check("orthocompact", oc.passed);

  if (prof.single_theta && in.c && !in.built.weights.empty()) {
    RationalVector betas;
    for (const auto& [a, b] : prof.intervals) {
      if (betas.empty()) betas.push_back(a);
      betas.push_back(b);
    }
    const bool ok = orthotoric::satisfies_cp_bound(prof.theta.front(), betas, *in.c, in.built.weights);
    out["cp_bound"] = {{"betas", rationals_json(betas)}, {"weights", bigints_json(in.built.weights)}, {"passed", ok}};
    ctx.check("cp_bound", ok);
  }

  auto bf = wbf::bochner_flat_check(prof);
  ctx.op("wbf", "bochner_flat_check");
  out["bochner_flat"] = {{"passed", bf.passed},
                         {"pattern", bf.pattern},
                         {"weights", bigints_json(bf.weights)},
                         {"reason", bf.reason}};
  if (bf.pattern == "weighted") out["bochner_flat"]["extra_root"] = rational_json(bf.extra_root);
  if (expect_bf) ctx.check("bochner_flat", bf.passed == *expect_bf);
  return out;
}

// ---------------------------------------------------------------- solve-wbf

namespace {

wbf::LineBundleProblem read_problem(Reader& r) {
  if (r.has("preset")) {
    const auto name = r.string("preset");
    return guarded("preset", [&] { return wbf::LineBundleProblem::preset(name); });
  }
  wbf::LineBundleProblem p;
  p.name = r.string_or("name", "");
  for (long d : r.integers("d")) p.d.push_back(static_cast<int>(d));
  p.s = r.rationals("s");
  if (r.has("degrees")) p.degrees = to_bigints(r.integers("degrees"));
  guarded("problem", [&] {
    p.validate();
    return 0;
  });
  return p;
}

/// Best rational with denominator <= max_den within tol of x, by continued fractions.
std::optional<Rational> rationalize(double x, double tol, long max_den = 10000) {
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e12) break;
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= tol) return Rational(BigInt(h1), BigInt(k1));
    if (r == a) break;
    r = 1 / (r - a);
  }
  return std::nullopt;
}

Json problem_json(const wbf::LineBundleProblem& p) {
  Json j;
  if (!p.name.empty()) j["name"] = p.name;
  j["d"] = p.d;
  j["s"] = rationals_json(p.s);
  if (!p.degrees.empty()) j["degrees"] = bigints_json(p.degrees);
  return j;
}

Json solution_json(const wbf::WbfSolution& s) {
  return {{"x", reals_json(s.x)},
          {"B", number(s.B)},
          {"F", decimal_strings(s.F.coefficients())},
          {"h", reals_json(s.h)},
          {"ca_residuals", reals_json(s.ca_residuals)},
          {"boundary_residual", number(s.boundary_residual)},
          {"sign_ok", s.sign_ok},
          {"is_einstein", s.is_einstein},
          {"passed", s.passed}};
}

Json integrality_json(const wbf::IntegrityReport& r) {
  Json f = Json::array();
  for (const auto& fa : r.factors) {
    Json j;
    if (fa.degree) j["degree"] = fa.degree->get_str();
    j["einstein_matches"] = fa.einstein_matches;
    j["chern"] = {number(fa.chern[0]), number(fa.chern[1])};
    j["chern_integral"] = fa.chern_integral;
    if (fa.blowdown_normalized) j["blowdown_normalized"] = *fa.blowdown_normalized;
    f.push_back(std::move(j));
  }
  return {{"exact", r.exact}, {"s_rational", r.s_rational}, {"factors", f}, {"passed", r.passed}};
}

double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// h_a at seeded rational points three ways: the symbolic h, exact
/// integration of the univariate integrand, and 32-point Gauss-Legendre.
Json quadrature_crosscheck(Context& ctx, const wbf::LineBundleProblem& p) {
  std::mt19937_64 rng(ctx.config().seed);
  std::uniform_int_distribution<int> pick(-900, 900);
  const auto rule = exact::gauss_legendre(32);
  ctx.op("exactmath", "gauss_legendre");
  ctx.op("exactmath", "poly_integrate_interval");
  double worst_rel = 0;
  bool exact_ok = true;
  const int points = std::max(1, ctx.config().samples);
  for (int k = 0; k < points; ++k) {
    RationalVector x;
    for (std::size_t a = 0; a < p.N(); ++a) {
      int v = 0;
      while (v == 0) v = pick(rng);
      x.emplace_back(BigInt(v), BigInt(1000));
    }
    Polynomial pc = Polynomial::constant(Rational(1));
    for (std::size_t b = 0; b < p.N(); ++b) pc *= Polynomial({Rational(1), x[b]}).pow(p.d[b]);
    for (std::size_t a = 0; a < p.N(); ++a) {
      const Rational xa = x[a], sa = p.s[a];
      const Rational k0 = xa * (xa * sa - Rational(1));
      Polynomial H({k0, Rational(1) - xa * xa, -k0});
      const Polynomial integrand = pc * H;
      const Rational exact_val = exact::poly_integrate_interval(integrand, Rational(-1), Rational(1));
      const Rational sym = wbf::h_exact(p, a)(x);
      exact_ok = exact_ok && exact_val == sym;
      const exact::RealPolynomial fi(exact::to_double(integrand.coefficients()));
      const double gl = rule.integrate([&](double t) { return fi(t); }, -1, 1);
      const double e = exact_val.to_double();
      worst_rel = std::max(worst_rel, std::abs(e - gl) / std::max(1.0, std::abs(e)));
    }
  }
  ctx.check("exact_integration", exact_ok);
  ctx.check("quadrature_agreement", worst_rel <= ctx.tol("wbf.quadrature"), worst_rel, ctx.tol("wbf.quadrature"));
  return {{"points", points}, {"max_relative_difference", number(worst_rel)}, {"exact_agreement", exact_ok}};
}

struct WbfExpectations {
  std::optional<long> solutions;
  std::vector<double> x;
  std::optional<double> B;
  std::optional<bool> integral;
};

Json solve_wbf_core(Context& ctx, const wbf::LineBundleProblem& p, const wbf::WbfOptions& options,
                    const WbfExpectations& expect) {
  Json out;
  out["problem"] = problem_json(p);
  Json hs = Json::array();
  for (std::size_t a = 0; a < p.N(); ++a) hs.push_back(wbf::to_string(wbf::h_exact(p, a)));
  ctx.op("wbf", "h_exact");
  out["h"] = hs;
  out["quadrature"] = quadrature_crosscheck(ctx, p);

  auto res = wbf::solve_wbf(p, options);
  ctx.op("wbf", "solve_wbf");
  ctx.op("wbf", "solve_B");
  const double rtol = ctx.tol("wbf.residual");
  Json sols = Json::array();
  for (std::size_t i = 0; i < res.solutions.size(); ++i) {
    const auto& s = res.solutions[i];
    Json j = solution_json(s);
    const double resid = std::max(max_abs(s.h), max_abs(s.ca_residuals));
    ctx.check("solution[" + std::to_string(i) + "]", s.passed && resid <= rtol, resid, rtol);

    // exact completion when the root is rational
    RationalVector xr;
    for (double v : s.x)
      if (auto r = rationalize(v, 1e-11)) xr.push_back(*r);
    bool exact_root = xr.size() == p.N();
    for (std::size_t a = 0; exact_root && a < p.N(); ++a) exact_root = wbf::h_exact(p, a)(xr).is_zero();
    std::optional<wbf::IntegrityReport> integ;
    if (exact_root) {
      const Rational B = wbf::solve_B(xr, p);
      j["exact"] = {{"x", rationals_json(xr)}, {"B", rational_json(B)},
                    {"F", polynomial_json(wbf::build_F(p, xr, B))}};
      if (!p.degrees.empty()) integ = wbf::check_integrality(p, xr);
    } else if (!p.degrees.empty()) {
      integ = wbf::check_integrality(p, s.x);
    }
    if (integ) {
      ctx.op("wbf", "check_integrality");
      j["integrality"] = integrality_json(*integ);
      if (expect.integral) ctx.check("integrality[" + std::to_string(i) + "]", integ->passed == *expect.integral);
    }
    sols.push_back(std::move(j));
  }
  out["solutions"] = sols;
  Json rej = Json::array();
  for (const auto& [x, why] : res.rejected) rej.push_back({{"x", reals_json(x)}, {"reason", why}});
  out["rejected"] = rej;
  out["seeds"] = res.seeds;

  if (expect.solutions)
    ctx.check("solution_count", static_cast<long>(res.solutions.size()) == *expect.solutions);
  else
    ctx.check("solution_count", !res.solutions.empty());
  if (!expect.x.empty()) {
    double best = std::numeric_limits<double>::infinity(), bdev = 0;
    for (const auto& s : res.solutions) {
      if (s.x.size() != expect.x.size()) continue;
      double e = 0;
      for (std::size_t a = 0; a < s.x.size(); ++a) e = std::max(e, std::abs(s.x[a] - expect.x[a]));
      if (e < best) best = e, bdev = expect.B ? std::abs(s.B - *expect.B) : 0;
    }
    ctx.check("expected_root", best <= rtol, best, rtol);
    if (expect.B) ctx.check("expected_B", bdev <= rtol, bdev, rtol);
  }

  if (p.N() == 1) {
    auto sc = wbf::check_sign_conditions(p);
    ctx.op("wbf", "check_sign_conditions");
    ctx.op("exactmath", "real_roots");
    Json roots = Json::array();
    for (const auto& r : sc.roots)
      roots.push_back({{"value", number(r.value)}, {"lower", r.lower.str()}, {"upper", r.upper.str()}});
    out["sign_conditions"] = {{"h_at_0", sc.h_at_0.str()},  {"dh_at_0", sc.dh_at_0.str()},
                              {"h_at_1", sc.h_at_1.str()},  {"dh_matches", sc.dh_matches},
                              {"sign_matches", sc.sign_matches}, {"boundary_case", sc.boundary_case},
                              {"verdict", wbf::to_string(sc.verdict)}, {"reason", sc.reason},
                              {"roots", roots},             {"consistent", sc.consistent}};
    ctx.check("sign_conditions", sc.h_at_0.is_zero() && sc.dh_matches && sc.sign_matches && sc.consistent);
  }
  return out;
}

Json blowdown(Context& ctx, Reader& doc) {
  wbf::BlowdownProblem bp;
  if (doc.has("s1")) bp.s1 = doc.rational("s1");
  if (doc.has("s2")) bp.s2 = doc.rational("s2");
  if (doc.has("K")) bp.K = doc.rational("K");
  const bool expect_consistent = doc.boolean_or("expect_consistent", true);
  auto r = guarded("solve_blowdown", [&] { return wbf::solve_blowdown(bp); });
  ctx.op("wbf", "solve_blowdown");
  ctx.op("exactmath", "real_roots");
  Json roots = Json::array();
  for (const auto& x : r.roots)
    roots.push_back({{"value", number(x.value)}, {"lower", x.lower.str()}, {"upper", x.upper.str()}});
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(solution_json(s));
  Json out = {{"problem", {{"s1", bp.s1.str()}, {"s2", bp.s2.str()}, {"K", bp.K.str()}}},
              {"f", polynomial_json(r.f)},
              {"f_at_minus1", r.f_at_minus1.str()},
              {"f_at_0", r.f_at_0.str()},
              {"df_at_0", r.df_at_0.str()},
              {"f_at_minus_half", r.f_at_minus_half.str()},
              {"consistent", r.consistent},
              {"diagnostic", r.diagnostic},
              {"roots", roots},
              {"not_einstein", r.not_einstein},
              {"solutions", sols},
              {"passed", r.passed}};
  ctx.check("blowdown_consistent", r.consistent == expect_consistent);
  if (expect_consistent) {
    ctx.check("blowdown_sign_facts", r.f_at_minus1.sign() < 0 && r.f_at_0.is_zero() && r.df_at_0.sign() < 0);
    ctx.check("blowdown_root", !r.roots.empty());
    ctx.check("blowdown_not_einstein", r.not_einstein);
    ctx.check("blowdown_solution", r.passed);
  }
  return out;
}

}  // namespace

Json cmd_solve_wbf(Context& ctx, Reader& doc) {
  require_kind(doc, Command::SolveWbf, {"wbf", "blowdown"});
  if (doc.string("kind") == "blowdown") return blowdown(ctx, doc);
  auto p = read_problem(doc);
  wbf::WbfOptions o;
  o.ca_tol = ctx.tol("wbf.residual");
  if (auto g = doc.optional_real("grid_step")) {
    if (!(*g > 0 && *g < 1)) throw UsageError(doc.context() + ": grid_step must lie in (0, 1)");
    o.grid_step = *g;
  }
  WbfExpectations e;
  if (doc.has("expect_solutions")) e.solutions = doc.integer("expect_solutions");
  if (doc.has("expect_x")) e.x = doc.reals("expect_x");
  e.B = doc.optional_real("expect_B");
  if (doc.has("expect_integral")) e.integral = doc.boolean_or("expect_integral", true);
  doc.finish();
  return solve_wbf_core(ctx, p, o, e);
}

Json cmd_solve_wbf_preset(Context& ctx, const std::string& preset) {
  auto p = guarded("preset", [&] { return wbf::LineBundleProblem::preset(preset); });
  wbf::WbfOptions o;
  o.ca_tol = ctx.tol("wbf.residual");
  return solve_wbf_core(ctx, p, o, {});
}

// ---------------------------------------------------------------- geometry scenes

namespace {

struct Scene {
  std::string metric;
  geom::CalabiData data;
  geom::MetricField field;
  std::function<geom::MetricSample(const Eigen::VectorXd&)> generic;
  Json description;
  std::vector<std::string> checks;
  std::optional<double> expect_scalar, expect_lambda;
};

geom::LineBundleData line_bundle_from(const wbf::LineBundleProblem& p, const wbf::WbfSolution& s) {
  geom::LineBundleData lb;
  for (std::size_t a = 0; a < p.N(); ++a) {
    lb.dims.push_back(p.d[a]);
    lb.eta.push_back(-1 / s.x[a]);
    lb.scal.push_back(2 * p.d[a] * p.s[a].to_double());
  }
  lb.F = s.F;
  return lb;
}

Scene line_bundle_scene(Context& ctx, geom::LineBundleData lb) {
  Scene sc;
  sc.data = guarded("line bundle", [&] { return geom::line_bundle_calabi_data(lb); });
  auto data = sc.data;
  sc.field = [lb, data](const Eigen::VectorXd& x) {
    return geom::eval_line_bundle_metric(lb, geom::from_coordinates(data, x));
  };
  ctx.op("geom", "eval_line_bundle_metric");
  sc.description = {{"dims", lb.dims}, {"eta", reals_json(lb.eta)}, {"scal", reals_json(lb.scal)},
                    {"F", real_polynomial_json(lb.F)},
                    {"gauge", lb.gauge == geom::Gauge::Standard ? "standard" : "shifted"}};
  return sc;
}

Scene read_scene(Context& ctx, Reader& doc) {
  Scene sc;
  sc.metric = doc.string("metric");
  if (sc.metric == "orthotoric") {
    auto pr = doc.table("profile");
    auto in = read_profile(ctx, pr);
    pr.finish();
    const auto prof = in.built.profile;
    sc.data = geom::orthotoric_data(prof);
    auto data = sc.data;
    sc.field = [prof, data](const Eigen::VectorXd& x) {
      return geom::eval_orthotoric_metric(prof, geom::from_coordinates(data, x));
    };
    ctx.op("geom", "eval_orthotoric_metric");
    sc.description = {{"profile", profile_json(in)}};
  } else if (sc.metric == "line-bundle") {
    geom::LineBundleData lb;
    for (long d : doc.integers("dims")) lb.dims.push_back(static_cast<int>(d));
    lb.eta = exact::to_double(doc.rationals("eta"));
    lb.scal = exact::to_double(doc.rationals("scal"));
    lb.F = exact::RealPolynomial(exact::to_double(doc.rationals("F")));
    const auto gauge = doc.string_or("gauge", "standard");
    if (gauge == "shifted")
      lb.gauge = geom::Gauge::Shifted;
    else if (gauge != "standard")
      throw UsageError(doc.context() + ": gauge must be \"standard\" or \"shifted\"");
    sc = line_bundle_scene(ctx, lb);
    sc.metric = "line-bundle";
  } else if (sc.metric == "wbf") {
    auto pr = doc.table("problem");
    auto p = read_problem(pr);
    pr.finish();
    const long index = doc.integer_or("solution", 0);
    auto res = wbf::solve_wbf(p);
    ctx.op("wbf", "solve_wbf");
    if (index < 0 || index >= static_cast<long>(res.solutions.size()))
      throw UsageError(doc.context() + ": problem has " + std::to_string(res.solutions.size()) +
                       " solutions, no index " + std::to_string(index));
    const auto& s = res.solutions[static_cast<std::size_t>(index)];
    sc = line_bundle_scene(ctx, line_bundle_from(p, s));
    sc.metric = "wbf";
    sc.description["problem"] = problem_json(p);
    sc.description["solution"] = solution_json(s);
  } else {
    throw UsageError(doc.context() + ": unknown metric '" + sc.metric + "' (orthotoric, line-bundle, wbf)");
  }
  auto data = sc.data;
  sc.generic = [data](const Eigen::VectorXd& x) { return geom::eval_metric(data, x); };
  sc.checks = doc.has("checks") ? doc.strings("checks") : std::vector<std::string>{"algebra", "einstein"};
  static const std::set<std::string> known{"algebra", "closedness", "hamiltonian", "einstein", "extremal", "scalar"};
  for (const auto& c : sc.checks)
    if (!known.count(c)) throw UsageError(doc.context() + ": unknown check '" + c + "'");
  sc.expect_scalar = doc.optional_real("expect_scalar");
  sc.expect_lambda = doc.optional_real("expect_lambda");
  doc.finish();
  return sc;
}

std::vector<Eigen::VectorXd> scene_points(const Scene& sc, const RunConfig& cfg, int minimum) {
  std::vector<Eigen::VectorXd> out;
  for (const auto& p : sample(sc.data, cfg, minimum)) out.push_back(geom::to_coordinates(sc.data, p));
  return out;
}

/// max |d phi + d(tr phi) ^ omega|; alternating the hamiltonian equation
/// gives d phi = -d sigma ^ omega with sigma = tr phi.
double phi_differential_residual(const geom::MetricField& field, const Eigen::VectorXd& x, double h) {
  auto dphi = geom::fd_gradient([&](const Eigen::VectorXd& y) { return field(y).phi; }, x, h);
  Eigen::VectorXd ds = geom::fd_gradient(
      [&](const Eigen::VectorXd& y) {
        auto s = field(y);
        return geom::trace_omega(s.omega, s.phi);
      },
      x, h);
  const Eigen::MatrixXd w = field(x).omega;
  const int n = static_cast<int>(x.size());
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const double d = dphi[i](j, k) + dphi[j](k, i) + dphi[k](i, j);
        const double a = ds(i) * w(j, k) + ds(j) * w(k, i) + ds(k) * w(i, j);
        worst = std::max(worst, std::abs(d + a));
      }
  return worst;
}

bool wants(const Scene& sc, const std::string& c) {
  return std::find(sc.checks.begin(), sc.checks.end(), c) != sc.checks.end();
}

}  // namespace

Json cmd_verify_curvature(Context& ctx, Reader& doc) {
  require_kind(doc, Command::VerifyCurvature, {"scene"});
  auto sc = read_scene(ctx, doc);
  const double h = geom::default_fd_step(sc.data);
  const int minimum = wants(sc, "extremal") ? 3 : (wants(sc, "einstein") ? 2 : 1);
  auto pts = scene_points(sc, ctx.config(), minimum);
  Json out;
  out["metric"] = sc.metric;
  out["scene"] = sc.description;
  out["real_dim"] = sc.data.real_dim();
  out["fd_step"] = number(h);
  out["checks_requested"] = sc.checks;

  Json per = Json::array();
  double algebra = 0, agree = 0, closed = 0, ham = 0, scal_dev = 0;
  for (const auto& x : pts) {
    auto cr = geom::curvature(sc.field, x, h);
    auto gs = sc.generic(x), fs = sc.field(x);
    agree = std::max({agree, (gs.g - fs.g).cwiseAbs().maxCoeff(), (gs.omega - fs.omega).cwiseAbs().maxCoeff(),
                      (gs.phi - fs.phi).cwiseAbs().maxCoeff()});
    Json pj;
    pj["point"] = vector_json(x);
    pj["scalar"] = number(cr.scalar);
    Json res = Json::object();
    for (const auto& [k, v] : cr.residuals) {
      res[k] = number(v);
      algebra = std::max(algebra, v);
    }
    pj["algebraic_residuals"] = res;
    if (wants(sc, "closedness")) {
      auto field = sc.field;
      const double c1 = geom::closedness_residual([&](const Eigen::VectorXd& y) { return field(y).omega; }, x, h);
      const double c2 = phi_differential_residual(field, x, h);
      pj["closedness"] = {{"d_omega", number(c1)}, {"d_phi_plus_dsigma_omega", number(c2)}};
      closed = std::max({closed, c1, c2});
    }
    if (wants(sc, "hamiltonian")) {
      const double r = geom::verify_hamiltonian(sc.field, x, h);
      pj["hamiltonian_residual"] = number(r);
      ham = std::max(ham, r);
    }
    if (sc.expect_scalar)
      scal_dev = std::max(scal_dev, std::abs(cr.scalar - *sc.expect_scalar) / std::max(1.0, std::abs(*sc.expect_scalar)));
    per.push_back(std::move(pj));
  }
  ctx.op("geom", "curvature");
  ctx.op("geom", "eval_metric");
  out["points"] = per;
  ctx.check("evaluator_agreement", agree <= ctx.tol("geom.algebra"), agree, ctx.tol("geom.algebra"));
  if (wants(sc, "algebra")) ctx.check("algebra", algebra <= ctx.tol("geom.algebra"), algebra, ctx.tol("geom.algebra"));
  if (wants(sc, "closedness"))
    ctx.check("closedness", closed <= ctx.tol("geom.closedness"), closed, ctx.tol("geom.closedness"));
  if (wants(sc, "hamiltonian")) {
    ctx.op("geom", "verify_hamiltonian");
    ctx.check("hamiltonian", ham <= ctx.tol("geom.hamiltonian"), ham, ctx.tol("geom.hamiltonian"));
  }
  if (wants(sc, "scalar")) {
    if (!sc.expect_scalar) throw UsageError(doc.context() + ": the scalar check needs expect_scalar");
    ctx.check("scalar", scal_dev <= ctx.tol("geom.scalar"), scal_dev, ctx.tol("geom.scalar"));
  }
  if (wants(sc, "einstein")) {
    auto e = geom::verify_einstein(sc.field, pts, h);
    ctx.op("geom", "verify_einstein");
    const double t = ctx.tol("geom.einstein");
    const double rel = e.max_deviation / std::abs(e.lambda);
    out["einstein"] = {{"lambda", number(e.lambda)},
                       {"max_deviation", number(e.max_deviation)},
                       {"relative_deviation", number(rel)},
                       {"relative_spread", number(e.relative_spread)},
                       {"lambdas", reals_json(e.lambdas)}};
    ctx.check("einstein_deviation", rel <= t, rel, t);
    ctx.check("einstein_spread", e.relative_spread <= t, e.relative_spread, t);
    if (sc.expect_lambda) {
      const double d = std::abs(e.lambda - *sc.expect_lambda) / std::max(1.0, std::abs(*sc.expect_lambda));
      ctx.check("einstein_lambda", d <= t, d, t);
    }
  }
  if (wants(sc, "extremal")) {
    auto e = geom::verify_extremal(sc.field, pts, h);
    ctx.op("geom", "verify_extremal");
    out["extremal"] = {{"a", number(e.a)},           {"b", number(e.b)},
                       {"residual", number(e.residual)}, {"degenerate", e.degenerate},
                       {"scalar", reals_json(e.scalar)}, {"trace", reals_json(e.trace)}};
    ctx.check("extremal", e.residual <= ctx.tol("geom.extremal"), e.residual, ctx.tol("geom.extremal"));
  }
  return out;
}

Json cmd_spectrum(Context& ctx, Reader& doc) {
  require_kind(doc, Command::Spectrum, {"scene"});
  auto sc = read_scene(ctx, doc);
  auto pts = scene_points(sc, ctx.config(), 1);
  Json out;
  out["metric"] = sc.metric;
  out["scene"] = sc.description;
  Json per = Json::array();
  double worst = 0;
  for (const auto& x : pts) {
    auto s = sc.field(x);
    auto got = geom::momentum_spectrum(s);
    auto want = geom::expected_spectrum(sc.data, x);
    double e = got.size() == want.size() ? 0 : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) e = std::max(e, std::abs(got[i] - want[i]));
    worst = std::max(worst, e);
    per.push_back({{"point", vector_json(x)},
                   {"spectrum", reals_json(got)},
                   {"expected", reals_json(want)},
                   {"trace_phi", number(geom::trace_omega(s.omega, s.phi))},
                   {"max_difference", number(e)}});
  }
  ctx.op("geom", "momentum_spectrum");
  out["points"] = per;
  ctx.check("spectrum", worst <= ctx.tol("geom.spectrum"), worst, ctx.tol("geom.spectrum"));
  return out;
}

// ---------------------------------------------------------------- solve-extremal

Json cmd_solve_extremal(Context& ctx, Reader& doc) {
  require_kind(doc, Command::SolveExtremal, {"extremal"});
  std::vector<wbf::ExtremalBase> base;
  auto d = doc.integers("d");
  auto scal = doc.rationals("scal");
  auto eta = doc.rationals("eta");
  if (d.size() != scal.size() || d.size() != eta.size())
    throw UsageError(doc.context() + ": d, scal and eta differ in length");
  for (std::size_t a = 0; a < d.size(); ++a) base.push_back({static_cast<int>(d[a]), scal[a]});
  const bool want_cs = doc.has("expect_constant_scalar");
  std::optional<bool> expect_cs;
  if (want_cs) expect_cs = doc.boolean_or("expect_constant_scalar", false);
  std::optional<RationalVector> wbf_s;
  if (doc.has("compare_wbf_s")) wbf_s = doc.rationals("compare_wbf_s");
  const bool geometry = doc.boolean_or("geometry", true);
  doc.finish();

  wbf::ExtremalProfile prof;
  try {
    prof = guarded("extremal_profile_l1", [&] { return wbf::extremal_profile_l1(base, eta, want_cs); });
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  ctx.op("wbf", "extremal_profile_l1");
  Json out;
  out["base"] = {{"d", d}, {"scal", rationals_json(scal)}, {"eta", rationals_json(eta)}};
  out["q"] = polynomial_json(prof.q);
  out["F"] = polynomial_json(prof.F);
  out["p_c"] = polynomial_json(prof.p_c);
  out["positive"] = prof.positive;
  if (prof.constant_scalar) out["constant_scalar"] = *prof.constant_scalar;
  ctx.check("positive", prof.positive);
  if (expect_cs) ctx.check("constant_scalar", prof.constant_scalar == expect_cs);

  if (wbf_s) {
    wbf::LineBundleProblem p;
    p.name = "extremal comparison";
    for (auto v : d) p.d.push_back(static_cast<int>(v));
    p.s = *wbf_s;
    guarded("compare_wbf_s", [&] {
      p.validate();
      return 0;
    });
    RationalVector x;
    for (const auto& e : eta) x.push_back(Rational(-1) / e);
    bool consistent = true;
    for (std::size_t a = 0; a < p.N(); ++a) consistent = consistent && wbf::h_exact(p, a)(x).is_zero();
    ctx.op("wbf", "h_exact");
    ctx.check("wbf_consistent", consistent);
    if (consistent) {
      const Rational B = wbf::solve_B(x, p);
      ctx.op("wbf", "solve_B");
      const auto Fw = wbf::build_F(p, x, B);
      out["wbf"] = {{"x", rationals_json(x)}, {"B", rational_json(B)}, {"F", polynomial_json(Fw)}};
      ctx.check("matches_wbf", Fw == prof.F);
    }
  }

  if (geometry && prof.positive) {
    geom::LineBundleData lb;
    for (std::size_t a = 0; a < d.size(); ++a) lb.dims.push_back(static_cast<int>(d[a]));
    lb.eta = exact::to_double(eta);
    lb.scal = exact::to_double(scal);
    lb.F = exact::RealPolynomial(exact::to_double(prof.F.coefficients()));
    auto sc = line_bundle_scene(ctx, lb);
    auto pts = scene_points(sc, ctx.config(), 3);
    auto e = geom::verify_extremal(sc.field, pts, geom::default_fd_step(sc.data));
    ctx.op("geom", "verify_extremal");
    ctx.op("geom", "curvature");
    out["extremal"] = {{"a", number(e.a)},           {"b", number(e.b)},
                       {"residual", number(e.residual)}, {"degenerate", e.degenerate},
                       {"scalar", reals_json(e.scalar)}, {"trace", reals_json(e.trace)}};
    ctx.check("extremal_residual", e.residual <= ctx.tol("geom.extremal"), e.residual, ctx.tol("geom.extremal"));
  }
  return out;
}

std::vector<Command> commands_for_kind(const std::string& kind) {
  if (kind == "polytope") return {Command::ValidatePolytope};
  if (kind == "profile") return {Command::BuildOrthotoric, Command::CheckCompactify};
  if (kind == "wbf" || kind == "blowdown") return {Command::SolveWbf};
  if (kind == "extremal") return {Command::SolveExtremal};
  if (kind == "scene") return {Command::VerifyCurvature, Command::Spectrum};
  return {};
}

}  // namespace hamform::cli
