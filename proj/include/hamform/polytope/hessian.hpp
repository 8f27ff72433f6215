// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include "hamform/exactmath/matrix.hpp"
#include "hamform/exactmath/polynomial.hpp"
#include "hamform/polytope/polytope.hpp"

#include <Eigen/Dense>

#include <functional>
#include <optional>

namespace hamform::polytope {

using exact::Polynomial;
using exact::RationalMatrix;

/// H(y + eps v) = numerator(eps) / denominator(eps), entrywise.
struct RayExpansion {
  std::vector<std::vector<Polynomial>> numerator;
  Polynomial denominator;
};

/// Symplectic-potential Hessian G on the interior of a polytope together with
/// its inverse H = G^{-1}, which extends smoothly to the closed polytope.
class HessianField {
public:
  using MatrixFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;
  using ExactRayFn = std::function<RayExpansion(const RationalVector&, const RationalVector&)>;
  using ExactPointFn = std::function<RationalMatrix(const RationalVector&)>;

  HessianField(std::size_t dim, MatrixFn inverse, MatrixFn hessian);

  std::size_t dim() const { return dim_; }
  Eigen::MatrixXd H(const Eigen::VectorXd& mu) const { return scale_ * inverse_(mu); }
  Eigen::MatrixXd G(const Eigen::VectorXd& mu) const { return hessian_(mu) / scale_; }

  bool has_exact() const { return static_cast<bool>(exact_ray_); }
  RayExpansion H_along(const RationalVector& y, const RationalVector& v) const;
  RationalMatrix H_exact(const RationalVector& y) const;
  RationalMatrix G_exact(const RationalVector& y) const;

  /// The field with H replaced by factor * H.
  HessianField scaled(const Rational& factor) const;

  HessianField& with_exact(ExactRayFn ray, ExactPointFn hessian);

private:
  std::size_t dim_;
  MatrixFn inverse_, hessian_;
  ExactRayFn exact_ray_;
  ExactPointFn exact_hessian_;
  double scale_ = 1;
  Rational exact_scale_{1};
};

/// Guillemin's potential: G_0 = 1/2 sum_j u_j u_j^T / L_j.  H_0 is evaluated
/// through a Cauchy-Binet closed form that stays regular on the boundary.
HessianField canonical_hessian(const RationalDelzantPolytope& P);

}  // namespace hamform::polytope
