// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include "hamform/geom/curvature.hpp"

namespace hamform::geom {

/// tr_omega phi = <phi, omega>, normalised so that tr omega = m.
double trace_omega(const Eigen::MatrixXd& omega, const Eigen::MatrixXd& phi);

/// Max componentwise residual of
///   nabla_X phi = 1/2 (d tr phi ^ (JX)^flat - d^c tr phi ^ X^flat)
/// over the coordinate basis X = e_k.  The two-argument form uses the phi
/// of the field; the other tests an arbitrary 2-form against the metric.
double verify_hamiltonian(const MetricField& field, const Eigen::VectorXd& x, double h);
double verify_hamiltonian(const MetricField& field, const MatrixFn& phi, const Eigen::VectorXd& x, double h);

struct EinsteinResult {
  double lambda = 0;          ///< least-squares Ric ~ lambda g at the first point
  double max_deviation = 0;   ///< max |Ric - lambda g| over all points
  double relative_spread = 0; ///< (max - min) / |lambda| of the per-point fits
  std::vector<double> lambdas;
};

/// Needs at least two points.
EinsteinResult verify_einstein(const MetricField& field, const std::vector<Eigen::VectorXd>& points, double h);

struct ExtremalResult {
  double a = 0, b = 0;    ///< Scal ~ a tr phi + b
  double residual = 0;    ///< max |Scal - a tr phi - b|
  bool degenerate = false; ///< tr phi constant across the points; a = 0, b = mean
  std::vector<double> scalar, trace;
};

/// Fits (a, b) from the first two points.  Needs at least three points.
ExtremalResult verify_extremal(const MetricField& field, const std::vector<Eigen::VectorXd>& points, double h);

/// Eigenvalues of omega^{-1} phi, ascending; every root appears twice.
std::vector<double> momentum_spectrum(const MetricSample& s);
std::vector<double> momentum_spectrum(const MetricField& field, const Eigen::VectorXd& x);

/// xi_j doubled and eta_a with multiplicity 2 d_a, ascending.
std::vector<double> expected_spectrum(const CalabiData& data, const Eigen::VectorXd& x);

}  // namespace hamform::geom
