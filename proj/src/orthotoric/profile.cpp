// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "hamform/orthotoric/profile.hpp"

#include "hamform/exactmath/roots.hpp"

#include <stdexcept>

namespace hamform::orthotoric {

using exact::RealInterval;

ThetaProfile ThetaProfile::single(Polynomial theta, const RationalVector& betas) {
  if (betas.size() < 2) throw std::invalid_argument("single-Theta profile needs at least two roots");
  ThetaProfile p;
  for (std::size_t j = 1; j < betas.size(); ++j) {
    p.intervals.emplace_back(betas[j - 1], betas[j]);
    p.theta.push_back(theta);
  }
  p.single_theta = true;
  p.validate();
  return p;
}

void ThetaProfile::validate() const {
  if (intervals.empty()) throw std::invalid_argument("profile needs at least one interval");
  if (theta.size() != intervals.size()) throw std::invalid_argument("profile needs one Theta per interval");
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    if (!(intervals[j].first < intervals[j].second))
      throw std::invalid_argument("profile interval " + std::to_string(j + 1) + " is empty");
    if (j + 1 < intervals.size() && intervals[j].second > intervals[j + 1].first)
      throw std::invalid_argument("profile intervals must be ordered and non-overlapping");
  }
  if (single_theta)
    for (const auto& t : theta)
      if (t != theta.front()) throw std::invalid_argument("single-Theta profile with differing functions");
}

namespace {

int alternating_sign(std::size_t m, std::size_t j_one_based) { return (m - j_one_based) % 2 ? -1 : 1; }

}  // namespace

OrthocompactReport check_orthocompact(const ThetaProfile& profile, const ProfileLabels& labels) {
  profile.validate();
  const std::size_t m = profile.m();
  if (labels.alpha.size() != m || labels.beta.size() != m)
    throw std::invalid_argument("check_orthocompact: one label per interval end");
  OrthocompactReport rep;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& th = profile.theta[j];
    auto d = th.derivative();
    for (bool at_alpha : {true, false}) {
      EndpointCheck e;
      e.interval = j + 1;
      e.at_alpha = at_alpha;
      e.endpoint = at_alpha ? profile.intervals[j].first : profile.intervals[j].second;
      e.label = at_alpha ? labels.alpha[j] : labels.beta[j];
      e.value = th(e.endpoint);
      e.derivative = d(e.endpoint);
      e.signed_product = e.derivative * e.label;
      e.unsigned_product = exact::abs(e.signed_product);
      e.passed = e.value.is_zero() && e.unsigned_product == Rational(2);
      if (e.signed_product != Rational(2)) rep.signs_consistent = false;
      if (!e.passed)
        rep.failures.push_back("interval " + std::to_string(j + 1) + (at_alpha ? " alpha" : " beta") +
                               ": Theta = " + e.value.str() + ", |Theta'| |c| = " + e.unsigned_product.str());
      rep.endpoints.push_back(std::move(e));
    }
    // Sign inside: no roots in the open interval and the right sign at the midpoint.
    auto [a, b] = profile.intervals[j];
    bool ok = !th.is_zero() && exact::real_roots(th, RealInterval::open(a, b)).empty() &&
              th((a + b) / Rational(2)).sign() == alternating_sign(m, j + 1);
    rep.interval_positive.push_back(ok);
    if (!ok) rep.failures.push_back("interval " + std::to_string(j + 1) + ": (-1)^(m-j) Theta_j is not positive inside");
    if (j + 1 < m && profile.intervals[j].second == profile.intervals[j + 1].first) {
      if (exact::abs(labels.beta[j]) != exact::abs(labels.alpha[j + 1])) {
        rep.shared_labels_consistent = false;
        rep.failures.push_back("shared endpoint " + profile.intervals[j].second.str() + ": labels differ");
      }
      if (profile.theta[j] != profile.theta[j + 1]) {
        rep.junctions_smooth = false;
        rep.failures.push_back("shared endpoint " + profile.intervals[j].second.str() +
                               ": Theta_j and Theta_{j+1} are different polynomials");
      }
    }
  }
  rep.passed = rep.failures.empty();
  return rep;
}

ProfileLabels cp_bound_labels(const RationalVector& betas, const Rational& c, std::span<const BigInt> n) {
  if (n.size() != betas.size()) throw std::invalid_argument("cp_bound_labels: one weight per root");
  RationalVector at(betas.size());
  for (std::size_t j = 0; j < betas.size(); ++j) {
    Rational prod(1);
    for (std::size_t k = 0; k < betas.size(); ++k)
      if (k != j) prod *= betas[j] - betas[k];
    // label = 2 / Theta'(beta_j)
    at[j] = Rational(-2) * Rational(n[j]) / (c * prod);
  }
  ProfileLabels l;
  for (std::size_t j = 1; j < betas.size(); ++j) {
    l.alpha.push_back(at[j - 1]);
    l.beta.push_back(at[j]);
  }
  return l;
}

bool satisfies_cp_bound(const Polynomial& theta, const RationalVector& betas, const Rational& c,
                        std::span<const BigInt> n) {
  auto d = theta.derivative();
  for (std::size_t j = 0; j < betas.size(); ++j) {
    Rational prod(1);
    for (std::size_t k = 0; k < betas.size(); ++k)
      if (k != j) prod *= betas[j] - betas[k];
    if (!theta(betas[j]).is_zero() || d(betas[j]) != -c / Rational(n[j]) * prod) return false;
  }
  return true;
}

WeightedProjectiveTag::WeightedProjectiveTag(std::vector<BigInt> a) : weights(std::move(a)) {
  if (weights.size() < 2) throw std::invalid_argument("weighted projective tag needs at least two weights");
  BigInt g = 0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] <= 0) throw std::invalid_argument("weights must be positive");
    if (j > 0 && !(weights[j - 1] > weights[j])) throw std::invalid_argument("weights must be strictly decreasing");
    g = exact::gcd(g, weights[j]);
  }
  if (g != 1) throw std::invalid_argument("weights must be coprime");
}

std::vector<BigInt> WeightedProjectiveTag::labels() const {
  std::vector<BigInt> n;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    BigInt p = 1;
    for (std::size_t k = 0; k < weights.size(); ++k)
      if (k != j) p *= weights[k];
    n.push_back(p);
  }
  return n;
}

BuiltProfile fubini_study_profile(const RationalVector& betas, const Rational& c) {
  if (c.sign() <= 0) throw std::invalid_argument("fubini_study_profile: c must be positive");
  auto theta = Rational(-1) * c * Polynomial::from_roots(betas);
  BuiltProfile b;
  b.profile = ThetaProfile::single(theta, betas);
  b.weights.assign(betas.size(), BigInt(1));
  b.labels = cp_bound_labels(betas, c, b.weights);
  return b;
}

BuiltProfile bochner_flat_profile(const WeightedProjectiveTag& tag, const Rational& c, const Rational& beta) {
  if (c.sign() <= 0) throw std::invalid_argument("bochner_flat_profile: c must be positive");
  BigInt prod = 1;
  for (const auto& a : tag.weights) prod *= a;
  RationalVector betas;
  for (const auto& a : tag.weights) betas.push_back(beta - Rational(a, prod));
  auto theta = c * Polynomial::root_factor(beta) * Polynomial::from_roots(betas);
  BuiltProfile b;
  b.profile = ThetaProfile::single(theta, betas);
  b.weights = tag.labels();
  b.labels = cp_bound_labels(betas, c, b.weights);
  if (!satisfies_cp_bound(theta, betas, c, b.weights))
    throw std::logic_error("bochner_flat_profile: boundary derivatives disagree with the weights");
  return b;
}

KeSurfaceProfiles ke_surface_profiles(const Rational& p, const Rational& q) {
  if (!(q.sign() > 0 && p > q)) throw std::invalid_argument("ke_surface_profiles: need p > q > 0");
  KeSurfaceProfiles ke;
  ke.C = (p - q) * (Rational(2) * q + p) * (Rational(2) * p + q) / Rational(2);
  RationalVector r1{-p, -q, p + q}, r2{p, q, -p - q};
  ke.P1 = Polynomial::from_roots(r1);
  ke.P2 = Polynomial::from_roots(r2);
  Rational s = Rational(-1) / ke.C;
  auto& prof = ke.built.profile;
  prof.intervals = {{-p, -q}, {q, p}};
  prof.theta = {s * ke.P1, s * ke.P2};
  prof.validate();
  Rational a = Rational(2) * q + p, b = Rational(2) * p + q;
  ke.built.labels.alpha = {-a, b};
  ke.built.labels.beta = {b, -a};
  return ke;
}

polytope::RationalDelzantPolytope orthotoric_polytope(const ThetaProfile& profile, const ProfileLabels& labels,
                                                      std::optional<exact::IntegerLattice> lattice) {
  profile.validate();
  const std::size_t m = profile.m();
  std::vector<RationalVector> normals;
  RationalVector offsets;
  // L = sign * |label| * p_nc(endpoint), p_nc(x) = sum_r (-1)^r sigma_r x^{m-r}.
  auto add = [&](const Rational& x, const Rational& label, int sign) {
    Rational s = Rational(sign) * exact::abs(label);
    RationalVector u(m);
    for (std::size_t r = 1; r <= m; ++r) {
      Rational term = exact::pow(x, static_cast<int>(m - r));
      u[r - 1] = s * ((r % 2) ? -term : term);
    }
    Rational off = s * exact::pow(x, static_cast<int>(m));
    for (std::size_t i = 0; i < normals.size(); ++i)
      if (normals[i] == u && offsets[i] == off) return;
    normals.push_back(std::move(u));
    offsets.push_back(off);
  };
  for (std::size_t j = 1; j <= m; ++j) {
    add(profile.intervals[j - 1].first, labels.alpha[j - 1], -alternating_sign(m, j));
    add(profile.intervals[j - 1].second, labels.beta[j - 1], alternating_sign(m, j));
  }
  return polytope::RationalDelzantPolytope(std::move(normals), std::move(offsets), std::move(lattice));
}

namespace {

Eigen::MatrixXd h_matrix(const ThetaProfile& profile, std::span<const double> xi) {
  const std::size_t m = profile.m();
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(m, m);
  std::vector<Rational> xr;
  for (double x : xi) xr.push_back(Rational::from_double(x));
  for (std::size_t j = 0; j < m; ++j) {
    double delta = 1;
    for (std::size_t k = 0; k < m; ++k)
      if (k != j) delta *= xi[j] - xi[k];
    if (delta == 0) throw std::domain_error("orthotoric_H: coincident roots");
    auto sig = exact::elem_sym_without<Rational>(xr, j);
    double th = exact::eval(profile.theta[j], xi[j]);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s) H(r, s) += th * sig[r].to_double() * sig[s].to_double() / delta;
  }
  return H;
}

}  // namespace

Eigen::MatrixXd orthotoric_H(const ThetaProfile& profile, std::span<const double> xi) {
  if (xi.size() != profile.m()) throw std::invalid_argument("orthotoric_H: one xi per interval");
  for (std::size_t j = 0; j < xi.size(); ++j) {
    double a = profile.intervals[j].first.to_double(), b = profile.intervals[j].second.to_double();
    if (!(xi[j] > a + 1e-9 && xi[j] < b - 1e-9))
      throw std::domain_error("orthotoric_H: xi_" + std::to_string(j + 1) + " = " + std::to_string(xi[j]) +
                              " is not inside its interval by the 1e-9 margin");
  }
  return h_matrix(profile, xi);
}

Eigen::MatrixXd orthotoric_H_closed(const ThetaProfile& profile, std::span<const double> xi) {
  if (xi.size() != profile.m()) throw std::invalid_argument("orthotoric_H: one xi per interval");
  return h_matrix(profile, xi);
}

std::vector<double> roots_to_sigma(std::span<const double> xi) {
  auto s = exact::elem_sym<double>(xi);
  return std::vector<double>(s.begin() + 1, s.end());
}

std::vector<double> sigma_to_roots(std::span<const double> sigma, const ThetaProfile& profile, double tol) {
  const std::size_t m = profile.m();
  if (sigma.size() != m) throw std::invalid_argument("sigma_to_roots: need m elementary symmetric values");
  std::vector<Rational> c(m + 1);
  for (std::size_t r = 0; r <= m; ++r) {
    Rational s = r == 0 ? Rational(1) : Rational::from_double(sigma[r - 1]);
    c[m - r] = (r % 2) ? -s : s;
  }
  auto roots = exact::real_roots(Polynomial(c), RealInterval::whole_line(), tol);
  std::vector<double> xi;
  for (const auto& r : roots)
    for (int k = 0; k < r.multiplicity; ++k) xi.push_back(r.value);
  if (xi.size() != m) throw std::domain_error("sigma_to_roots: sigma has non-real roots");
  for (std::size_t j = 0; j < m; ++j) {
    double a = profile.intervals[j].first.to_double(), b = profile.intervals[j].second.to_double();
    if (xi[j] < a - 1e-9 || xi[j] > b + 1e-9)
      throw std::domain_error("sigma_to_roots: xi_" + std::to_string(j + 1) + " = " + std::to_string(xi[j]) +
                              " lies outside its interval");
  }
  return xi;
}

}  // namespace hamform::orthotoric
