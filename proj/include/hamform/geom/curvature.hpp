// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include "hamform/geom/metric.hpp"

#include <map>
#include <string>

namespace hamform::geom {

using MatrixFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;
using VectorFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Levi-Civita data at one point.  christoffel[i](j, k) = Gamma^i_{jk};
/// riemann(i, j, k, l) = R^i_{jkl} with Ric_{jl} = R^i_{jil}.
struct CurvatureReport {
  Eigen::VectorXd point;
  Eigen::MatrixXd g, omega, J, phi;
  std::vector<Eigen::MatrixXd> christoffel;
  std::vector<double> riemann_data;
  Eigen::MatrixXd ricci;
  double scalar = 0;
  std::map<std::string, double> residuals;

  int dim() const { return static_cast<int>(g.rows()); }
  double riemann(int i, int j, int k, int l) const;
  double max_abs_riemann() const;
};

/// Step 1e-4 times the smallest momentum range (capped at 1).
double default_fd_step(const CalabiData& data);

/// Centred differences with Richardson extrapolation over (h, h/2).
/// Result[k] is the derivative along coordinate k.
std::vector<Eigen::MatrixXd> fd_gradient(const MatrixFn& f, const Eigen::VectorXd& x, double h);
Eigen::VectorXd fd_gradient(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x,
                            double h);

std::vector<Eigen::MatrixXd> christoffel(const MatrixFn& g, const Eigen::VectorXd& x, double h);

/// Riemann, Ricci and scalar curvature of g at x.  Evaluator errors
/// (std::domain_error) propagate when the stencil leaves the chart.
CurvatureReport curvature(const MatrixFn& g, const Eigen::VectorXd& x, double h);
/// As above; also fills the algebraic compatibility residuals
/// (omega_antisymmetry, j_squared, j_isometry, omega_compatibility).
CurvatureReport curvature(const MetricField& field, const Eigen::VectorXd& x, double h);

/// Residuals of omega(X, Y) = g(JX, Y), J^2 = -1 and g(J., J.) = g.
std::map<std::string, double> algebraic_residuals(const MetricSample& s);

/// (d alpha)_{ij} = d_i alpha_j - d_j alpha_i by finite differences.
Eigen::MatrixXd exterior_derivative(const VectorFn& alpha, const Eigen::VectorXd& x, double h);
/// max |d_i w_jk + d_j w_ki + d_k w_ij|.
double closedness_residual(const MatrixFn& two_form, const Eigen::VectorXd& x, double h);

}  // namespace hamform::geom
