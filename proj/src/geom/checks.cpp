// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "hamform/geom/checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hamform::geom {

double trace_omega(const Eigen::MatrixXd& omega, const Eigen::MatrixXd& phi) {
  return 0.5 * omega.partialPivLu().solve(phi).trace();
}

double verify_hamiltonian(const MetricField& field, const Eigen::VectorXd& x, double h) {
  return verify_hamiltonian(field, [&](const Eigen::VectorXd& y) { return field(y).phi; }, x, h);
}

double verify_hamiltonian(const MetricField& field, const MatrixFn& phi, const Eigen::VectorXd& x, double h) {
  const int n = static_cast<int>(x.size());
  MatrixFn g = [&](const Eigen::VectorXd& y) { return field(y).g; };
  auto gamma = christoffel(g, x, h);
  auto dphi = fd_gradient(phi, x, h);
  auto tr = [&](const Eigen::VectorXd& y) { return trace_omega(field(y).omega, phi(y)); };
  Eigen::VectorXd df = fd_gradient(std::function<double(const Eigen::VectorXd&)>(tr), x, h);

  const auto s = field(x);
  const Eigen::MatrixXd P = phi(x);
  // (J df)_j = -df(J e_j)
  Eigen::VectorXd dcf = -(s.J.transpose() * df);

  double worst = 0;
  for (int k = 0; k < n; ++k) {
    Eigen::MatrixXd nabla = dphi[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int p = 0; p < n; ++p) nabla(i, j) -= gamma[p](k, i) * P(p, j) + gamma[p](k, j) * P(i, p);
    Eigen::VectorXd jx = s.omega.row(k).transpose();  // (J e_k)^flat
    Eigen::VectorXd xf = s.g.row(k).transpose();      // e_k^flat
    Eigen::MatrixXd rhs = 0.5 * ((df * jx.transpose() - jx * df.transpose()) -
                                 (dcf * xf.transpose() - xf * dcf.transpose()));
    worst = std::max(worst, (nabla - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

namespace {

double fit_lambda(const CurvatureReport& r) {
  return (r.ricci.array() * r.g.array()).sum() / r.g.squaredNorm();
}

}  // namespace

EinsteinResult verify_einstein(const MetricField& field, const std::vector<Eigen::VectorXd>& points, double h) {
  if (points.size() < 2) throw std::invalid_argument("verify_einstein needs at least two points");
  EinsteinResult out;
  std::vector<CurvatureReport> reps;
  for (const auto& x : points) reps.push_back(curvature(field, x, h));
  out.lambda = fit_lambda(reps.front());
  for (const auto& r : reps) {
    out.lambdas.push_back(fit_lambda(r));
    out.max_deviation = std::max(out.max_deviation, (r.ricci - out.lambda * r.g).cwiseAbs().maxCoeff());
  }
  auto [lo, hi] = std::minmax_element(out.lambdas.begin(), out.lambdas.end());
  out.relative_spread = out.lambda != 0 ? (*hi - *lo) / std::abs(out.lambda) : *hi - *lo;
  return out;
}

ExtremalResult verify_extremal(const MetricField& field, const std::vector<Eigen::VectorXd>& points, double h) {
  if (points.size() < 3) throw std::invalid_argument("verify_extremal needs at least three points");
  ExtremalResult out;
  for (const auto& x : points) {
    auto r = curvature(field, x, h);
    out.scalar.push_back(r.scalar);
    out.trace.push_back(trace_omega(r.omega, r.phi));
  }
  const double dt = out.trace[1] - out.trace[0];
  double spread = 0;
  for (double t : out.trace) spread = std::max(spread, std::abs(t - out.trace[0]));
  if (spread < 1e-9 * (1 + std::abs(out.trace[0]))) {
    out.degenerate = true;
    double sum = 0;
    for (double s : out.scalar) sum += s;
    out.a = 0;
    out.b = sum / static_cast<double>(out.scalar.size());
  } else if (std::abs(dt) < 1e-6 * (1 + std::abs(out.trace[0]))) {
    // First two points too close in tr phi for a stable two-point fit:
    // least squares over all points instead.
    Eigen::MatrixXd A(out.trace.size(), 2);
    Eigen::VectorXd y(out.trace.size());
    for (std::size_t i = 0; i < out.trace.size(); ++i) {
      A(i, 0) = out.trace[i];
      A(i, 1) = 1;
      y[i] = out.scalar[i];
    }
    Eigen::Vector2d ab = A.colPivHouseholderQr().solve(y);
    out.a = ab[0];
    out.b = ab[1];
  } else {
    out.a = (out.scalar[1] - out.scalar[0]) / dt;
    out.b = out.scalar[0] - out.a * out.trace[0];
  }
  for (std::size_t i = 0; i < out.scalar.size(); ++i)
    out.residual = std::max(out.residual, std::abs(out.scalar[i] - out.a * out.trace[i] - out.b));
  return out;
}

std::vector<double> momentum_spectrum(const MetricSample& s) {
  Eigen::MatrixXd A = s.omega.partialPivLu().solve(s.phi);
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("momentum spectrum: eigen solver failed");
  std::vector<double> ev;
  for (int i = 0; i < A.rows(); ++i) ev.push_back(es.eigenvalues()[i].real());
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> momentum_spectrum(const MetricField& field, const Eigen::VectorXd& x) {
  return momentum_spectrum(field(x));
}

std::vector<double> expected_spectrum(const CalabiData& data, const Eigen::VectorXd& x) {
  std::vector<double> ev;
  for (int j = 0; j < data.ell; ++j) ev.insert(ev.end(), 2, x[j]);
  for (const auto& f : data.factors) ev.insert(ev.end(), 2 * f.dim, f.eta);
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace hamform::geom
