// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "hamform/geom/metric.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace hamform::geom {

int CalabiData::base_dim() const {
  int n = 0;
  for (const auto& f : factors) n += 2 * f.dim;
  return n;
}

RealPolynomial CalabiData::p_c() const {
  RealPolynomial p = RealPolynomial::constant(1.0);
  for (const auto& f : factors) p *= RealPolynomial::root_factor(f.eta).pow(f.dim);
  return p;
}

void CalabiData::validate() const {
  if (ell < 1) throw std::invalid_argument("Calabi data needs ell >= 1");
  if (static_cast<int>(F.size()) != ell) throw std::invalid_argument("Calabi data needs one profile per xi");
  if (static_cast<int>(xi_box.size()) != ell) throw std::invalid_argument("Calabi data needs one range per xi");
  for (const auto& f : factors) {
    if (f.dim < 1) throw std::invalid_argument("base factor dimension must be positive");
    if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("base factor sign must be +1 or -1");
  }
}

Eigen::VectorXd to_coordinates(const CalabiData& data, const ChartPoint& pt) {
  Eigen::VectorXd x(data.real_dim());
  if (static_cast<int>(pt.xi.size()) != data.ell || static_cast<int>(pt.t.size()) != data.ell ||
      pt.w.size() != data.factors.size())
    throw std::invalid_argument("chart point does not match the data layout");
  int k = 0;
  for (double v : pt.xi) x[k++] = v;
  for (double v : pt.t) x[k++] = v;
  for (std::size_t a = 0; a < data.factors.size(); ++a) {
    const int d = data.factors[a].dim;
    if (static_cast<int>(pt.w[a].size()) != d) throw std::invalid_argument("chart point: base dimension mismatch");
    for (int i = 0; i < d; ++i) x[k + i] = pt.w[a][i].real();
    for (int i = 0; i < d; ++i) x[k + d + i] = pt.w[a][i].imag();
    k += 2 * d;
  }
  return x;
}

ChartPoint from_coordinates(const CalabiData& data, const Eigen::VectorXd& x) {
  ChartPoint pt;
  int k = 0;
  for (int j = 0; j < data.ell; ++j) pt.xi.push_back(x[k++]);
  for (int j = 0; j < data.ell; ++j) pt.t.push_back(x[k++]);
  for (const auto& f : data.factors) {
    std::vector<std::complex<double>> w(f.dim);
    for (int i = 0; i < f.dim; ++i) w[i] = {x[k + i], x[k + f.dim + i]};
    pt.w.push_back(std::move(w));
    k += 2 * f.dim;
  }
  return pt;
}

namespace {

Eigen::MatrixXd wedge(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return a * b.transpose() - b * a.transpose();
}

// Model metric, Kahler form and primitive of the Kahler form of one factor
// in its own 2d real coordinates (Re w, Im w).
struct ModelBlock {
  Eigen::MatrixXd g, omega;
  Eigen::VectorXd alpha;
};

ModelBlock model_block(const BaseFactor& f, const double* coords) {
  const int d = f.dim;
  Eigen::VectorXd u = Eigen::Map<const Eigen::VectorXd>(coords, d);
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(coords + d, d);
  const double s = u.squaredNorm() + v.squaredNorm();
  const double rho = 1 + 0.5 * f.kappa * s;
  if (!(rho > 0)) throw std::domain_error("base point outside the domain of the model metric");
  const double d1 = 1 / rho, d2 = -0.5 * f.kappa / (rho * rho);
  // h_{jk} = d1 delta_jk + d2 conj(w_j) w_k = A + i B
  Eigen::MatrixXd A = d1 * Eigen::MatrixXd::Identity(d, d) + d2 * (u * u.transpose() + v * v.transpose());
  Eigen::MatrixXd B = d2 * (u * v.transpose() - v * u.transpose());
  ModelBlock m;
  m.g.resize(2 * d, 2 * d);
  m.g << 2 * A, 2 * B, -2 * B, 2 * A;
  m.omega.resize(2 * d, 2 * d);
  m.omega << -2 * B, 2 * A, -2 * A, -2 * B;
  m.alpha.resize(2 * d);
  m.alpha << -d1 * v, d1 * u;
  return m;
}

struct Frame {
  int n = 0, ell = 0;
  std::vector<double> sigma;           // sigma_0..sigma_ell of xi
  std::vector<Eigen::VectorXd> dsig;   // dsigma_0..dsigma_{ell+1}, with dsigma_0 = dsigma_{ell+1} = 0
  std::vector<Eigen::VectorXd> theta;  // theta_1..theta_ell (index 0 unused)
  std::vector<ModelBlock> blocks;
  std::vector<int> offset;
};

Frame build_frame(const CalabiData& data, const Eigen::VectorXd& x) {
  Frame fr;
  fr.n = data.real_dim();
  fr.ell = data.ell;
  if (x.size() != fr.n) throw std::invalid_argument("coordinate vector has the wrong dimension");
  const int ell = data.ell;
  std::vector<double> xi(x.data(), x.data() + ell);
  fr.sigma = exact::elem_sym<double>(xi);
  fr.dsig.assign(ell + 2, Eigen::VectorXd::Zero(fr.n));
  for (int j = 0; j < ell; ++j) {
    auto hat = exact::elem_sym_without<double>(xi, j);
    for (int r = 1; r <= ell; ++r) fr.dsig[r][j] = hat[r - 1];
  }
  int k = 2 * ell;
  for (std::size_t a = 0; a < data.factors.size(); ++a) {
    fr.offset.push_back(k);
    auto blk = model_block(data.factors[a], x.data() + k);
    const double eps = data.factors[a].sign;
    blk.g *= eps;
    blk.omega *= eps;
    blk.alpha *= eps;
    if (a == 0 && data.gauge == Gauge::Shifted) blk.alpha[0] += 1;  // alpha_1 + d(Re w_1)
    fr.blocks.push_back(std::move(blk));
    k += 2 * data.factors[a].dim;
  }
  fr.theta.assign(ell + 1, Eigen::VectorXd::Zero(fr.n));
  for (int r = 1; r <= ell; ++r) {
    fr.theta[r][ell + r - 1] = 1;
    for (std::size_t a = 0; a < data.factors.size(); ++a) {
      double c = ((r % 2) ? -1.0 : 1.0) * std::pow(data.factors[a].eta, ell - r);
      fr.theta[r].segment(fr.offset[a], fr.blocks[a].alpha.size()) += c * fr.blocks[a].alpha;
    }
  }
  return fr;
}

}  // namespace

Eigen::MatrixXd connection_forms(const CalabiData& data, const Eigen::VectorXd& x) {
  auto fr = build_frame(data, x);
  Eigen::MatrixXd T(data.ell, fr.n);
  for (int r = 1; r <= data.ell; ++r) T.row(r - 1) = fr.theta[r].transpose();
  return T;
}

std::vector<Eigen::MatrixXd> connection_curvatures(const CalabiData& data, const Eigen::VectorXd& x) {
  auto fr = build_frame(data, x);
  std::vector<Eigen::MatrixXd> out;
  for (int r = 1; r <= data.ell; ++r) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(fr.n, fr.n);
    for (std::size_t a = 0; a < data.factors.size(); ++a) {
      double c = ((r % 2) ? -1.0 : 1.0) * std::pow(data.factors[a].eta, data.ell - r);
      int sz = static_cast<int>(fr.blocks[a].alpha.size());
      M.block(fr.offset[a], fr.offset[a], sz, sz) += c * fr.blocks[a].omega;
    }
    out.push_back(std::move(M));
  }
  return out;
}

MetricSample eval_metric(const CalabiData& data, const Eigen::VectorXd& x) {
  auto fr = build_frame(data, x);
  const int n = fr.n, ell = data.ell;
  std::vector<double> xi(x.data(), x.data() + ell);
  for (int j = 0; j < ell; ++j) {
    auto [lo, hi] = data.xi_box[j];
    const double margin = kChartMargin * (hi - lo);
    if (!(xi[j] > lo + margin && xi[j] < hi - margin))
      throw std::domain_error("xi_" + std::to_string(j + 1) + " = " + std::to_string(xi[j]) +
                              " is outside the momentum range");
    for (int k = 0; k < j; ++k)
      if (std::abs(xi[j] - xi[k]) < margin) throw std::domain_error("momentum coordinates collide");
  }
  auto pc = data.p_c();

  MetricSample s;
  s.g = Eigen::MatrixXd::Zero(n, n);
  s.omega = Eigen::MatrixXd::Zero(n, n);
  s.phi = Eigen::MatrixXd::Zero(n, n);

  for (std::size_t a = 0; a < data.factors.size(); ++a) {
    const double eta = data.factors[a].eta;
    double pnc = 1;
    for (double v : xi) pnc *= eta - v;
    const int o = fr.offset[a], sz = static_cast<int>(fr.blocks[a].alpha.size());
    s.g.block(o, o, sz, sz) += pnc * fr.blocks[a].g;
    s.omega.block(o, o, sz, sz) += pnc * fr.blocks[a].omega;
    s.phi.block(o, o, sz, sz) += eta * pnc * fr.blocks[a].omega;
  }
  for (int j = 0; j < ell; ++j) {
    double delta = 1;
    for (int k = 0; k < ell; ++k)
      if (k != j) delta *= xi[j] - xi[k];
    const double pprime = pc(xi[j]) * delta;
    const double Fj = data.F[j](xi[j]);
    if (!(pprime / Fj > 0) || !std::isfinite(pprime / Fj))
      throw std::domain_error("metric degenerates at xi_" + std::to_string(j + 1) + " = " + std::to_string(xi[j]));
    auto hat = exact::elem_sym_without<double>(xi, j);
    Eigen::VectorXd Th = Eigen::VectorXd::Zero(n);
    for (int r = 1; r <= ell; ++r) Th += hat[r - 1] * fr.theta[r];
    s.g(j, j) += pprime / Fj;
    s.g += (Fj / pprime) * Th * Th.transpose();
  }
  for (int r = 1; r <= ell; ++r) {
    s.omega += wedge(fr.dsig[r], fr.theta[r]);
    Eigen::VectorXd a = fr.sigma[r] * fr.dsig[1] - fr.dsig[r + 1];
    s.phi += wedge(a, fr.theta[r]);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(s.g);
  if (llt.info() != Eigen::Success) throw std::domain_error("metric is not positive definite at this point");
  s.J = -llt.solve(s.omega);
  return s;
}

MetricSample eval_metric(const CalabiData& data, const ChartPoint& pt) {
  return eval_metric(data, to_coordinates(data, pt));
}

CalabiData orthotoric_data(const orthotoric::ThetaProfile& profile) {
  profile.validate();
  CalabiData d;
  d.ell = static_cast<int>(profile.m());
  for (std::size_t j = 0; j < profile.m(); ++j) {
    d.F.push_back(exact::to_real(profile.theta[j]));
    d.xi_box.emplace_back(profile.intervals[j].first.to_double(), profile.intervals[j].second.to_double());
  }
  return d;
}

MetricSample eval_orthotoric_metric(const orthotoric::ThetaProfile& profile, const ChartPoint& pt) {
  return eval_metric(orthotoric_data(profile), pt);
}

CalabiData line_bundle_calabi_data(const LineBundleData& lb) {
  if (lb.dims.size() != lb.eta.size() || lb.dims.size() != lb.scal.size())
    throw std::invalid_argument("line bundle data: dims, eta and scal differ in length");
  CalabiData d;
  d.ell = 1;
  d.F = {lb.F};
  d.xi_box = {{-1.0, 1.0}};
  d.gauge = lb.gauge;
  for (std::size_t a = 0; a < lb.dims.size(); ++a) {
    if (!(std::abs(lb.eta[a]) > 1)) throw std::invalid_argument("line bundle data: need |eta_a| > 1");
    BaseFactor f;
    f.dim = lb.dims[a];
    f.eta = lb.eta[a];
    // g_a has the sign of x_a = -1/eta_a; in the momentum-polynomial
    // convention the factor enters with the opposite sign.
    const double sx = lb.eta[a] < 0 ? 1.0 : -1.0;
    f.sign = -sx;
    f.kappa = sx * lb.scal[a] / (f.dim * (f.dim + 1));
    d.factors.push_back(f);
  }
  return d;
}

MetricSample eval_line_bundle_metric(const LineBundleData& lb, const ChartPoint& pt) {
  return eval_metric(line_bundle_calabi_data(lb), pt);
}

std::vector<ChartPoint> sample_points(const CalabiData& data, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<ChartPoint> pts;
  for (int i = 0; i < count; ++i) {
    ChartPoint p;
    for (int j = 0; j < data.ell; ++j) {
      auto [a, b] = data.xi_box[j];
      p.xi.push_back(a + (b - a) * (0.05 + 0.9 * unit(rng)));
    }
    for (int j = 0; j < data.ell; ++j) p.t.push_back(2 * std::numbers::pi * unit(rng));
    for (const auto& f : data.factors) {
      std::vector<std::complex<double>> w;
      double half = 0.5;
      if (f.kappa < 0) half = std::min(half, 0.5 / std::sqrt(-f.kappa * f.dim));
      for (int k = 0; k < f.dim; ++k) w.emplace_back(half * (2 * unit(rng) - 1), half * (2 * unit(rng) - 1));
      p.w.push_back(std::move(w));
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace hamform::geom
