// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include "hamform/exactmath/polynomial.hpp"
#include "hamform/polytope/hessian.hpp"

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

namespace hamform::orthotoric {

using exact::BigInt;
using exact::Polynomial;
using exact::Rational;
using exact::RationalVector;

/// Functions Theta_j on the intervals [alpha_j, beta_j] of an orthotoric
/// chart, j = 1..m (stored zero-based).
struct ThetaProfile {
  std::vector<std::pair<Rational, Rational>> intervals;
  std::vector<Polynomial> theta;
  bool single_theta = false;

  std::size_t m() const { return intervals.size(); }

  /// One Theta on consecutive intervals [beta_{j-1}, beta_j].
  static ThetaProfile single(Polynomial theta, const RationalVector& betas);

  /// Checks interval ordering alpha_j < beta_j <= alpha_{j+1}.
  void validate() const;
};

/// Signed boundary labels: Theta_j'(endpoint) * label = 2 for a compatible profile.
struct ProfileLabels {
  RationalVector alpha, beta;
};

struct EndpointCheck {
  std::size_t interval = 0;
  bool at_alpha = true;
  Rational endpoint, value, derivative, label;
  Rational signed_product, unsigned_product;
  bool passed = false;
};

struct OrthocompactReport {
  std::vector<EndpointCheck> endpoints;
  std::vector<bool> interval_positive;  ///< (-1)^{m-j} Theta_j > 0 on the open interval
  bool shared_labels_consistent = true;
  bool junctions_smooth = true;
  bool signs_consistent = true;  ///< every signed product equals 2
  std::vector<std::string> failures;
  bool passed = false;
};

/// Exact check of the compactification conditions: Theta_j vanishes at the
/// ends with |Theta_j'| |c| = 2, has the alternating sign inside, and
/// adjacent intervals sharing an endpoint share the label and the function.
OrthocompactReport check_orthocompact(const ThetaProfile& profile, const ProfileLabels& labels);

/// Labels forced on a single-Theta simplex profile by weights n_j:
/// Theta'(beta_j) = -(c / n_j) prod_{k != j} (beta_j - beta_k).
ProfileLabels cp_bound_labels(const RationalVector& betas, const Rational& c, std::span<const BigInt> n);
bool satisfies_cp_bound(const Polynomial& theta, const RationalVector& betas, const Rational& c,
                        std::span<const BigInt> n);

/// Weights a_0 > ... > a_m > 0 with gcd 1 of a weighted projective space.
struct WeightedProjectiveTag {
  std::vector<BigInt> weights;

  explicit WeightedProjectiveTag(std::vector<BigInt> a);
  std::size_t m() const { return weights.size() - 1; }
  /// n_j = prod_{k != j} a_k
  std::vector<BigInt> labels() const;
};

struct BuiltProfile {
  ThetaProfile profile;
  ProfileLabels labels;
  std::vector<BigInt> weights;  ///< n_j for single-Theta builders
};

/// Theta_0 = -c prod (t - beta_j).
BuiltProfile fubini_study_profile(const RationalVector& betas, const Rational& c);

/// Theta = c (t - beta) prod (t - beta_j) with beta_j = beta - a_j / prod a_k.
BuiltProfile bochner_flat_profile(const WeightedProjectiveTag& tag, const Rational& c, const Rational& beta);

struct KeSurfaceProfiles {
  BuiltProfile built;
  Rational C;
  Polynomial P1, P2;  ///< Theta_j = -P_j / C
};

/// Kahler-Einstein orthotoric surface with parameters p > q > 0 on the
/// intervals [-p, -q] and [q, p].
KeSurfaceProfiles ke_surface_profiles(const Rational& p, const Rational& q);

/// Polytope in sigma coordinates cut out by the endpoint facets, normals
/// scaled by |label|.  Lattice defaults to the one generated by the normals.
polytope::RationalDelzantPolytope orthotoric_polytope(const ThetaProfile& profile, const ProfileLabels& labels,
                                                      std::optional<exact::IntegerLattice> lattice = std::nullopt);

/// H_rs = sum_j Theta_j(xi_j) sigma_{r-1}(xi^_j) sigma_{s-1}(xi^_j) / Delta_j on
/// the interior; throws within 1e-9 of an interval end.
Eigen::MatrixXd orthotoric_H(const ThetaProfile& profile, std::span<const double> xi);

/// Same formula without the interior check; needs distinct xi_j.
Eigen::MatrixXd orthotoric_H_closed(const ThetaProfile& profile, std::span<const double> xi);

/// Roots xi_1 <= ... <= xi_m of t^m - sigma_1 t^{m-1} + ..., checked to lie in
/// their intervals within 1e-9.
std::vector<double> sigma_to_roots(std::span<const double> sigma, const ThetaProfile& profile,
                                   double tol = 1e-15);

/// sigma_r(xi), r = 1..m.
std::vector<double> roots_to_sigma(std::span<const double> xi);

/// H as a field on the sigma-space polytope (float evaluation only).
polytope::HessianField orthotoric_hessian_field(const ThetaProfile& profile);

}  // namespace hamform::orthotoric
