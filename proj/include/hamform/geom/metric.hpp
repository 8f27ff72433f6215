// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include "hamform/exactmath/polynomial.hpp"
#include "hamform/orthotoric/profile.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace hamform::geom {

using exact::RealPolynomial;

/// Constant-curvature Kahler model on C^d with potential
/// (2/kappa) log(1 + kappa |w|^2 / 2) (|w|^2 when kappa = 0); holomorphic
/// sectional curvature kappa.  The factor enters as sign * model.
struct BaseFactor {
  int dim = 1;
  double kappa = 0;
  double sign = 1;
  double eta = 0;  ///< constant root of the momentum polynomial
};

enum class Gauge { Standard, Shifted };

/// Data of a metric of Calabi type: ell momentum coordinates xi_j with
/// profiles F_j, torus angles t_r, and base factors with constant roots eta_a.
struct CalabiData {
  int ell = 1;
  std::vector<BaseFactor> factors;
  std::vector<RealPolynomial> F;                   ///< F_1..F_ell
  std::vector<std::pair<double, double>> xi_box;   ///< sampling range of each xi_j
  Gauge gauge = Gauge::Standard;

  int base_dim() const;  ///< real dimension of the base
  int real_dim() const { return 2 * ell + base_dim(); }
  /// p_c(t) = prod_a (t - eta_a)^{d_a}
  RealPolynomial p_c() const;
  void validate() const;
};

/// Point of the chart: xi, angles t, and complex base coordinates per factor.
struct ChartPoint {
  std::vector<double> xi, t;
  std::vector<std::vector<std::complex<double>>> w;
};

/// Coordinate layout: xi_1..xi_ell, t_1..t_ell, then per factor Re w, Im w.
Eigen::VectorXd to_coordinates(const CalabiData& data, const ChartPoint& pt);
ChartPoint from_coordinates(const CalabiData& data, const Eigen::VectorXd& x);

/// Metric, Kahler form, complex structure J = -G^{-1} W and the 2-form phi,
/// all as matrices in the coordinate basis (omega(X, Y) = X^T W Y).
struct MetricSample {
  Eigen::MatrixXd g, omega, J, phi;
};

using MetricField = std::function<MetricSample(const Eigen::VectorXd&)>;

/// Relative distance of xi from the ends of its range and from the other xi.
inline constexpr double kChartMargin = 1e-3;

/// Throws std::domain_error where the metric degenerates or xi is within
/// kChartMargin of the boundary of its range.
MetricSample eval_metric(const CalabiData& data, const Eigen::VectorXd& x);
MetricSample eval_metric(const CalabiData& data, const ChartPoint& pt);

/// theta_r = dt_r + sum_a (-1)^r eta_a^{ell-r} alpha_a, r = 1..ell, as rows.
Eigen::MatrixXd connection_forms(const CalabiData& data, const Eigen::VectorXd& x);
/// sum_a (-1)^r eta_a^{ell-r} omega_a, the expected d theta_r.
std::vector<Eigen::MatrixXd> connection_curvatures(const CalabiData& data, const Eigen::VectorXd& x);

/// Orthotoric chart: no base, F_j = Theta_j.
CalabiData orthotoric_data(const orthotoric::ThetaProfile& profile);
MetricSample eval_orthotoric_metric(const orthotoric::ThetaProfile& profile, const ChartPoint& pt);

/// Data of a metric on a projective line bundle over a product of Kahler
/// factors, with the momentum z in [-1, 1] and roots eta_a = -1/x_a.  scal_a
/// is the scalar curvature of the factor metric g_a whose sign is sign(x_a).
struct LineBundleData {
  std::vector<int> dims;
  std::vector<double> eta;
  std::vector<double> scal;
  RealPolynomial F;
  Gauge gauge = Gauge::Standard;
};

CalabiData line_bundle_calabi_data(const LineBundleData& lb);
MetricSample eval_line_bundle_metric(const LineBundleData& lb, const ChartPoint& pt);

/// Seeded interior sample points: xi_j in the middle 90% of its range, base
/// coordinates in a box of half-width 1/2, angles uniform.
std::vector<ChartPoint> sample_points(const CalabiData& data, int count, std::uint64_t seed);

}  // namespace hamform::geom
