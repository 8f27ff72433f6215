// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "hamform/polytope/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace hamform::polytope {

namespace {

std::vector<long> first_primes(std::size_t count) {
  std::vector<long> primes;
  for (long c = 2; primes.size() < count; ++c)
    if (std::all_of(primes.begin(), primes.end(), [c](long p) { return c % p != 0; })) primes.push_back(c);
  return primes;
}

Rational radical_inverse(long index, long base) {
  Rational r, scale = Rational(1) / Rational(base);
  while (index > 0) {
    r += Rational(index % base) * scale;
    index /= base;
    scale /= Rational(base);
  }
  return r;
}

bool positive_definite(const RationalMatrix& M) {
  for (std::size_t k = 1; k <= M.rows(); ++k) {
    RationalMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = M(i, j);
    if (exact::determinant(lead).sign() <= 0) return false;
  }
  return true;
}

Eigen::MatrixXd to_eigen(const RationalMatrix& M) {
  Eigen::MatrixXd E(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) E(i, j) = M(i, j).to_double();
  return E;
}

Eigen::VectorXd to_eigen(const RationalVector& v) {
  Eigen::VectorXd E(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) E[i] = v[i].to_double();
  return E;
}

// Basis of the orthogonal complement of the face normals.
std::vector<RationalVector> transverse_basis(const RationalDelzantPolytope& P, const std::vector<std::size_t>& face) {
  const std::size_t m = P.dim();
  if (face.empty()) {
    std::vector<RationalVector> id(m, RationalVector(m));
    for (std::size_t i = 0; i < m; ++i) id[i][i] = Rational(1);
    return id;
  }
  RationalMatrix A(face.size(), m);
  for (std::size_t i = 0; i < face.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) A(i, j) = P.normals()[face[i]][j];
  return exact::nullspace(A);
}

double min_eigenvalue(const Eigen::MatrixXd& M) {
  if (M.rows() == 0) return INFINITY;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

struct SampleResult {
  double vanishing = 0, derivative = 0, min_eig = INFINITY;
  double factor_min = INFINITY, factor_max = -INFINITY;
  bool positive = true;
};

SampleResult check_exact(const HessianField& field, const RationalDelzantPolytope& P, const Face& face,
                         const RationalVector& y, const RationalVector& v,
                         const std::vector<RationalVector>& Z) {
  const std::size_t m = P.dim();
  auto R = field.H_along(y, v);
  Rational D0 = R.denominator(Rational()), D1 = R.denominator.derivative()(Rational());
  if (D0.sign() == 0) throw std::domain_error("Hessian field denominator vanishes on the polytope");
  RationalMatrix H0(m, m), dH(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Rational n0 = R.numerator[a][b](Rational()), n1 = R.numerator[a][b].derivative()(Rational());
      H0(a, b) = n0 / D0;
      dH(a, b) = (n1 * D0 - n0 * D1) / (D0 * D0);
    }
  SampleResult s;
  const auto& U = P.normals();
  for (auto j : face.normals) {
    for (const auto& x : H0 * U[j]) s.vanishing = std::max(s.vanishing, std::abs(x.to_double()));
    for (auto k : face.normals) {
      Rational got = exact::dot(U[j], dH * U[k]);
      Rational expect = j == k ? Rational(2) * exact::dot(U[j], v) : Rational(0);
      s.derivative = std::max(s.derivative, std::abs((got - expect).to_double()) / (1 + std::abs(expect.to_double())));
      if (j == k) {
        double f = (got / expect).to_double();
        s.factor_min = std::min(s.factor_min, f);
        s.factor_max = std::max(s.factor_max, f);
      }
    }
  }
  RationalMatrix T(Z.size(), Z.size());
  for (std::size_t i = 0; i < Z.size(); ++i)
    for (std::size_t j = 0; j < Z.size(); ++j) T(i, j) = exact::dot(Z[i], H0 * Z[j]);
  s.positive = positive_definite(T);
  s.min_eig = min_eigenvalue(to_eigen(T));
  return s;
}

SampleResult check_float(const HessianField& field, const RationalDelzantPolytope& P, const Face& face,
                         const RationalVector& y, const RationalVector& v, const std::vector<RationalVector>& Z,
                         double step) {
  const std::size_t m = P.dim();
  Eigen::VectorXd yf = to_eigen(y), vf = to_eigen(v);
  SampleResult s;
  Eigen::MatrixXd H0 = field.H(yf);
  if (!face.normals.empty()) {
    vf /= vf.norm();
    Eigen::MatrixXd H1 = field.H(yf + step * vf), H2 = field.H(yf + 2 * step * vf);
    Eigen::MatrixXd dH = (-3 * H0 + 4 * H1 - H2) / (2 * step);
    for (auto j : face.normals) {
      Eigen::VectorXd uj = to_eigen(P.normals()[j]);
      s.vanishing = std::max(s.vanishing, (H0 * uj).cwiseAbs().maxCoeff());
      for (auto k : face.normals) {
        Eigen::VectorXd uk = to_eigen(P.normals()[k]);
        double got = uj.dot(dH * uk);
        double expect = j == k ? 2 * uj.dot(vf) : 0.0;
        s.derivative = std::max(s.derivative, std::abs(got - expect) / (1 + std::abs(expect)));
        if (j == k) {
          s.factor_min = std::min(s.factor_min, got / expect);
          s.factor_max = std::max(s.factor_max, got / expect);
        }
      }
    }
  }
  if (!Z.empty()) {
    Eigen::MatrixXd Zf(m, Z.size());
    for (std::size_t i = 0; i < Z.size(); ++i) Zf.col(i) = to_eigen(Z[i]);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(Zf);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(m, Z.size());
    s.min_eig = min_eigenvalue(Q.transpose() * H0 * Q);
    s.positive = s.min_eig > 0;
  }
  return s;
}

}  // namespace

std::vector<RationalVector> face_samples(const Face& face, const PolytopeReport& report, int count,
                                         const Rational& margin) {
  const std::size_t k = face.vertices.size();
  if (k == 1) return {report.vertices[face.vertices[0]].point};
  if (Rational(static_cast<long>(k)) * margin >= Rational(1))
    throw std::invalid_argument("face_samples: margin too large for the face");
  auto primes = first_primes(k);
  std::vector<RationalVector> out;
  for (int i = 1; i <= count; ++i) {
    std::vector<Rational> r(k);
    Rational total;
    for (std::size_t a = 0; a < k; ++a) {
      // Shift away from zero so no weight collapses.
      r[a] = radical_inverse(i, primes[a]) + Rational(BigInt(1), BigInt(2 * primes[a]));
      total += r[a];
    }
    Rational free = Rational(1) - Rational(static_cast<long>(k)) * margin;
    RationalVector x(report.vertices.front().point.size());
    for (std::size_t a = 0; a < k; ++a) {
      Rational w = margin + free * r[a] / total;
      const auto& p = report.vertices[face.vertices[a]].point;
      for (std::size_t c = 0; c < x.size(); ++c) x[c] += w * p[c];
    }
    out.push_back(std::move(x));
  }
  return out;
}

ToricBoundaryReport check_toric_boundary(const HessianField& field, const RationalDelzantPolytope& P,
                                         const BoundaryOptions& options) {
  if (field.dim() != P.dim()) throw std::invalid_argument("check_toric_boundary: dimension mismatch");
  auto report = verify_delzant(P);
  auto all_faces = faces(P, report);
  auto centre = vertex_centroid(report);
  double diameter = 0;
  for (const auto& a : report.vertices)
    for (const auto& b : report.vertices) {
      double d = 0;
      for (std::size_t i = 0; i < a.point.size(); ++i) d += std::pow((a.point[i] - b.point[i]).to_double(), 2);
      diameter = std::max(diameter, std::sqrt(d));
    }
  const double step = options.step_fraction * diameter;

  ToricBoundaryReport out;
  out.exact = options.prefer_exact && field.has_exact();
  out.factor_min = INFINITY;
  out.factor_max = -INFINITY;
  for (const auto& face : all_faces) {
    FaceBoundaryResult fr;
    fr.normals = face.normals;
    fr.dim = face.dim;
    fr.min_transverse_eigenvalue = INFINITY;
    fr.factor_min = INFINITY;
    fr.factor_max = -INFINITY;
    auto Z = transverse_basis(P, face.normals);
    for (const auto& y : face_samples(face, report, options.samples_per_face, options.margin)) {
      RationalVector v(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) v[i] = centre[i] - y[i];
      auto s = out.exact ? check_exact(field, P, face, y, v, Z) : check_float(field, P, face, y, v, Z, step);
      ++fr.samples;
      fr.vanishing_residual = std::max(fr.vanishing_residual, s.vanishing);
      fr.derivative_residual = std::max(fr.derivative_residual, s.derivative);
      fr.min_transverse_eigenvalue = std::min(fr.min_transverse_eigenvalue, s.min_eig);
      fr.factor_min = std::min(fr.factor_min, s.factor_min);
      fr.factor_max = std::max(fr.factor_max, s.factor_max);
      fr.positive = fr.positive && s.positive;
    }
    if (face.normals.empty()) fr.factor_min = fr.factor_max = 1;
    fr.passed = fr.positive && fr.vanishing_residual <= options.tol && fr.derivative_residual <= options.tol;
    out.passed = out.passed && fr.passed;
    out.max_vanishing_residual = std::max(out.max_vanishing_residual, fr.vanishing_residual);
    out.max_derivative_residual = std::max(out.max_derivative_residual, fr.derivative_residual);
    if (!face.normals.empty()) {
      out.factor_min = std::min(out.factor_min, fr.factor_min);
      out.factor_max = std::max(out.factor_max, fr.factor_max);
    }
    out.faces.push_back(std::move(fr));
  }
  return out;
}

}  // namespace hamform::polytope
