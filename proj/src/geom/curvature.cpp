// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "hamform/geom/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace hamform::geom {

double CurvatureReport::riemann(int i, int j, int k, int l) const {
  const int n = dim();
  return riemann_data[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
}

double CurvatureReport::max_abs_riemann() const {
  double m = 0;
  for (double v : riemann_data) m = std::max(m, std::abs(v));
  return m;
}

double default_fd_step(const CalabiData& data) {
  double scale = 1;
  for (const auto& [a, b] : data.xi_box) scale = std::min(scale, b - a);
  return 1e-4 * scale;
}

namespace {

std::vector<Eigen::MatrixXd> centred(const MatrixFn& f, const Eigen::VectorXd& x, double h) {
  std::vector<Eigen::MatrixXd> out;
  out.reserve(x.size());
  for (int k = 0; k < x.size(); ++k) {
    Eigen::VectorXd p = x, m = x;
    p[k] += h;
    m[k] -= h;
    out.push_back((f(p) - f(m)) / (2 * h));
  }
  return out;
}

std::vector<Eigen::MatrixXd> christoffel_plain(const MatrixFn& g, const Eigen::VectorXd& x, double h) {
  const int n = static_cast<int>(x.size());
  auto dg = centred(g, x, h);
  Eigen::MatrixXd ginv = g(x).inverse();
  std::vector<Eigen::MatrixXd> gamma(n, Eigen::MatrixXd::Zero(n, n));
  // lowered first index: Gamma_{l jk} = 1/2 (d_j g_lk + d_k g_lj - d_l g_jk)
  std::vector<Eigen::MatrixXd> low(n, Eigen::MatrixXd::Zero(n, n));
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) low[l](j, k) = 0.5 * (dg[j](l, k) + dg[k](l, j) - dg[l](j, k));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const double c = ginv(i, l);
      if (c != 0) gamma[i] += c * low[l];
    }
  return gamma;
}

// Stack Gamma^i as an n x n^2 matrix so it can be differentiated as one.
Eigen::MatrixXd stack(const std::vector<Eigen::MatrixXd>& gamma) {
  const int n = static_cast<int>(gamma.size());
  Eigen::MatrixXd s(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) s(i, j * n + k) = gamma[i](j, k);
  return s;
}

struct RawCurvature {
  std::vector<Eigen::MatrixXd> gamma;
  std::vector<double> riemann;
};

RawCurvature curvature_plain(const MatrixFn& g, const Eigen::VectorXd& x, double h) {
  const int n = static_cast<int>(x.size());
  RawCurvature out;
  out.gamma = christoffel_plain(g, x, h);
  MatrixFn stacked = [&](const Eigen::VectorXd& y) { return stack(christoffel_plain(g, y, h)); };
  auto dgamma = centred(stacked, x, h);  // dgamma[k](i, j*n + l) = d_k Gamma^i_{jl}
  const auto& G = out.gamma;
  out.riemann.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double r = dgamma[k](i, l * n + j) - dgamma[l](i, k * n + j);
          for (int p = 0; p < n; ++p) r += G[i](k, p) * G[p](l, j) - G[i](l, p) * G[p](k, j);
          out.riemann[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l] = r;
        }
  return out;
}

}  // namespace

std::vector<Eigen::MatrixXd> fd_gradient(const MatrixFn& f, const Eigen::VectorXd& x, double h) {
  auto a = centred(f, x, h), b = centred(f, x, h / 2);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = (4 * b[k] - a[k]) / 3;
  return a;
}

Eigen::VectorXd fd_gradient(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x,
                            double h) {
  MatrixFn m = [&](const Eigen::VectorXd& y) { return Eigen::MatrixXd::Constant(1, 1, f(y)); };
  auto d = fd_gradient(m, x, h);
  Eigen::VectorXd out(x.size());
  for (int k = 0; k < x.size(); ++k) out[k] = d[k](0, 0);
  return out;
}

std::vector<Eigen::MatrixXd> christoffel(const MatrixFn& g, const Eigen::VectorXd& x, double h) {
  auto a = christoffel_plain(g, x, h), b = christoffel_plain(g, x, h / 2);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (4 * b[i] - a[i]) / 3;
  return a;
}

CurvatureReport curvature(const MatrixFn& g, const Eigen::VectorXd& x, double h) {
  const int n = static_cast<int>(x.size());
  auto coarse = curvature_plain(g, x, h);
  auto fine = curvature_plain(g, x, h / 2);
  CurvatureReport rep;
  rep.point = x;
  rep.g = g(x);
  rep.christoffel.resize(n);
  for (int i = 0; i < n; ++i) rep.christoffel[i] = (4 * fine.gamma[i] - coarse.gamma[i]) / 3;
  rep.riemann_data.resize(coarse.riemann.size());
  for (std::size_t k = 0; k < coarse.riemann.size(); ++k)
    rep.riemann_data[k] = (4 * fine.riemann[k] - coarse.riemann[k]) / 3;
  rep.ricci = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i) rep.ricci(j, l) += rep.riemann(i, j, i, l);
  rep.ricci = 0.5 * (rep.ricci + rep.ricci.transpose()).eval();
  rep.scalar = (rep.g.inverse() * rep.ricci).trace();
  return rep;
}

CurvatureReport curvature(const MetricField& field, const Eigen::VectorXd& x, double h) {
  MatrixFn g = [&](const Eigen::VectorXd& y) { return field(y).g; };
  auto rep = curvature(g, x, h);
  auto s = field(x);
  rep.omega = s.omega;
  rep.J = s.J;
  rep.phi = s.phi;
  rep.residuals = algebraic_residuals(s);
  return rep;
}

std::map<std::string, double> algebraic_residuals(const MetricSample& s) {
  const int n = static_cast<int>(s.g.rows());
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  std::map<std::string, double> r;
  r["omega_antisymmetry"] = (s.omega + s.omega.transpose()).cwiseAbs().maxCoeff();
  r["j_squared"] = (s.J * s.J + I).cwiseAbs().maxCoeff();
  r["j_isometry"] = (s.J.transpose() * s.g * s.J - s.g).cwiseAbs().maxCoeff();
  // omega(X, Y) = g(JX, Y)  <=>  W = J^T G
  r["omega_compatibility"] = (s.J.transpose() * s.g - s.omega).cwiseAbs().maxCoeff();
  return r;
}

Eigen::MatrixXd exterior_derivative(const VectorFn& alpha, const Eigen::VectorXd& x, double h) {
  MatrixFn col = [&](const Eigen::VectorXd& y) { return Eigen::MatrixXd(alpha(y)); };
  auto d = fd_gradient(col, x, h);
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = d[i](j, 0) - d[j](i, 0);
  return out;
}

double closedness_residual(const MatrixFn& two_form, const Eigen::VectorXd& x, double h) {
  auto d = fd_gradient(two_form, x, h);
  const int n = static_cast<int>(x.size());
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        worst = std::max(worst, std::abs(d[i](j, k) + d[j](k, i) + d[k](i, j)));
  return worst;
}

}  // namespace hamform::geom
