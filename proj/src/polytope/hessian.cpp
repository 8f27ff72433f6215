// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "hamform/polytope/hessian.hpp"

#include "subsets.hpp"

#include <memory>
#include <stdexcept>

namespace hamform::polytope {

HessianField::HessianField(std::size_t dim, MatrixFn inverse, MatrixFn hessian)
    : dim_(dim), inverse_(std::move(inverse)), hessian_(std::move(hessian)) {}

HessianField& HessianField::with_exact(ExactRayFn ray, ExactPointFn hessian) {
  exact_ray_ = std::move(ray);
  exact_hessian_ = std::move(hessian);
  return *this;
}

RayExpansion HessianField::H_along(const RationalVector& y, const RationalVector& v) const {
  if (!exact_ray_) throw std::logic_error("Hessian field has no exact evaluation");
  auto r = exact_ray_(y, v);
  for (auto& row : r.numerator)
    for (auto& p : row) p *= exact_scale_;
  return r;
}

RationalMatrix HessianField::H_exact(const RationalVector& y) const {
  auto r = H_along(y, RationalVector(dim_));
  Rational d = r.denominator(Rational());
  if (d.is_zero()) throw std::domain_error("Hessian field: degenerate denominator");
  RationalMatrix H(dim_, dim_);
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b) H(a, b) = r.numerator[a][b](Rational()) / d;
  return H;
}

RationalMatrix HessianField::G_exact(const RationalVector& y) const {
  if (!exact_hessian_) throw std::logic_error("Hessian field has no exact evaluation");
  return (Rational(1) / exact_scale_) * exact_hessian_(y);
}

HessianField HessianField::scaled(const Rational& factor) const {
  if (factor.sign() <= 0) throw std::invalid_argument("Hessian field scale must be positive");
  HessianField f = *this;
  f.scale_ *= factor.to_double();
  f.exact_scale_ *= factor;
  return f;
}

namespace {

// Constant tables of the Cauchy-Binet expansion
//   H_0 = 2 A / D,  A = sum_T C_T prod_{k not in T} L_k,  D = sum_S det(U_S)^2 prod_{k not in S} L_k
// over (m-1)-subsets T and m-subsets S of the normals.
struct CanonicalTables {
  std::size_t m = 0, n = 0;
  std::vector<RationalVector> normals;
  RationalVector offsets;
  std::vector<std::vector<std::size_t>> T_complement, S_complement;
  std::vector<RationalMatrix> C;
  std::vector<Rational> detsq;
  std::vector<Eigen::MatrixXd> Cf;
  std::vector<double> detsqf;
};

RationalMatrix select(const std::vector<RationalVector>& U, std::span<const std::size_t> cols, std::size_t skip_row,
                      std::size_t m) {
  // Rows: coordinates a != skip_row (skip_row == m keeps all); columns: chosen normals.
  std::size_t rows = skip_row < m ? m - 1 : m;
  RationalMatrix M(rows, cols.size());
  std::size_t r = 0;
  for (std::size_t a = 0; a < m; ++a) {
    if (a == skip_row) continue;
    for (std::size_t j = 0; j < cols.size(); ++j) M(r, j) = U[cols[j]][a];
    ++r;
  }
  return M;
}

std::vector<std::size_t> complement(std::span<const std::size_t> S, std::size_t n) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (i < S.size() && S[i] == k) ++i;
    else out.push_back(k);
  }
  return out;
}

std::shared_ptr<const CanonicalTables> build_tables(const RationalDelzantPolytope& P) {
  auto t = std::make_shared<CanonicalTables>();
  t->m = P.dim();
  t->n = P.facets();
  t->normals = P.normals();
  t->offsets = P.offsets();
  const std::size_t m = t->m;
  for_each_subset(t->n, m - 1, [&](std::span<const std::size_t> T) {
    std::vector<Rational> minors(m);
    bool any = false;
    for (std::size_t a = 0; a < m; ++a) {
      minors[a] = T.empty() ? Rational(1) : exact::determinant(select(t->normals, T, a, m));
      if (!minors[a].is_zero()) any = true;
    }
    if (!any) return;
    RationalMatrix C(m, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) C(a, b) = ((a + b) % 2 ? Rational(-1) : Rational(1)) * minors[a] * minors[b];
    Eigen::MatrixXd Cf(m, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) Cf(a, b) = C(a, b).to_double();
    t->C.push_back(std::move(C));
    t->Cf.push_back(std::move(Cf));
    t->T_complement.push_back(complement(T, t->n));
  });
  for_each_subset(t->n, m, [&](std::span<const std::size_t> S) {
    Rational d = exact::determinant(select(t->normals, S, m, m));
    if (d.is_zero()) return;
    t->detsq.push_back(d * d);
    t->detsqf.push_back((d * d).to_double());
    t->S_complement.push_back(complement(S, t->n));
  });
  return t;
}

}  // namespace

HessianField canonical_hessian(const RationalDelzantPolytope& P) {
  auto t = build_tables(P);
  const std::size_t m = t->m;

  auto affine_f = [t](const Eigen::VectorXd& mu) {
    std::vector<double> L(t->n);
    for (std::size_t k = 0; k < t->n; ++k) {
      double s = t->offsets[k].to_double();
      for (std::size_t i = 0; i < t->m; ++i) s += t->normals[k][i].to_double() * mu[i];
      L[k] = s;
    }
    return L;
  };

  auto inverse = [t, affine_f](const Eigen::VectorXd& mu) {
    auto L = affine_f(mu);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(t->m, t->m);
    for (std::size_t i = 0; i < t->C.size(); ++i) {
      double w = 1;
      for (auto k : t->T_complement[i]) w *= L[k];
      A += w * t->Cf[i];
    }
    double D = 0;
    for (std::size_t i = 0; i < t->detsqf.size(); ++i) {
      double w = t->detsqf[i];
      for (auto k : t->S_complement[i]) w *= L[k];
      D += w;
    }
    if (!(D > 0)) throw std::domain_error("canonical Hessian evaluated outside the polytope");
    return Eigen::MatrixXd(2 * A / D);
  };

  auto hessian = [t, affine_f](const Eigen::VectorXd& mu) {
    auto L = affine_f(mu);
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(t->m, t->m);
    for (std::size_t k = 0; k < t->n; ++k) {
      if (!(L[k] > 0)) throw std::domain_error("canonical potential Hessian is singular off the interior");
      Eigen::VectorXd u(t->m);
      for (std::size_t i = 0; i < t->m; ++i) u[i] = t->normals[k][i].to_double();
      G += 0.5 * u * u.transpose() / L[k];
    }
    return G;
  };

  auto ray = [t](const RationalVector& y, const RationalVector& v) {
    std::vector<Polynomial> L(t->n);
    for (std::size_t k = 0; k < t->n; ++k)
      L[k] = Polynomial({exact::dot(t->normals[k], y) + t->offsets[k], exact::dot(t->normals[k], v)});
    RayExpansion r;
    r.numerator.assign(t->m, std::vector<Polynomial>(t->m));
    for (std::size_t i = 0; i < t->C.size(); ++i) {
      Polynomial w = Polynomial::constant(Rational(2));
      for (auto k : t->T_complement[i]) w *= L[k];
      for (std::size_t a = 0; a < t->m; ++a)
        for (std::size_t b = 0; b < t->m; ++b)
          if (!t->C[i](a, b).is_zero()) r.numerator[a][b] += t->C[i](a, b) * w;
    }
    for (std::size_t i = 0; i < t->detsq.size(); ++i) {
      Polynomial w = Polynomial::constant(t->detsq[i]);
      for (auto k : t->S_complement[i]) w *= L[k];
      r.denominator += w;
    }
    return r;
  };

  auto exact_hessian = [t](const RationalVector& y) {
    RationalMatrix G(t->m, t->m);
    for (std::size_t k = 0; k < t->n; ++k) {
      Rational L = exact::dot(t->normals[k], y) + t->offsets[k];
      if (L.sign() <= 0) throw std::domain_error("canonical potential Hessian is singular off the interior");
      for (std::size_t a = 0; a < t->m; ++a)
        for (std::size_t b = 0; b < t->m; ++b) G(a, b) += t->normals[k][a] * t->normals[k][b] / (Rational(2) * L);
    }
    return G;
  };

  HessianField field(m, inverse, hessian);
  field.with_exact(ray, exact_hessian);
  return field;
}

}  // namespace hamform::polytope
