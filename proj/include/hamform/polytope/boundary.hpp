// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include "hamform/polytope/hessian.hpp"

#include <vector>

namespace hamform::polytope {

struct BoundaryOptions {
  int samples_per_face = 4;
  double tol = 1e-8;
  /// Minimum barycentric weight of each face vertex in a sample point.
  Rational margin{BigInt(1), BigInt(100)};
  /// Exact rational residuals when the field supports them, else finite differences.
  bool prefer_exact = true;
  /// One-sided difference step as a fraction of the polytope diameter.
  double step_fraction = 1e-6;
};

struct FaceBoundaryResult {
  std::vector<std::size_t> normals;
  int dim = 0;
  std::size_t samples = 0;
  double vanishing_residual = 0;   ///< max |H_y(u_j, .)|
  double derivative_residual = 0;  ///< max |dH(u_j, u_k)(v) - 2 delta_jk <u_j, v>|
  double min_transverse_eigenvalue = 0;
  /// Extremes of dH(u_j, u_j)(v) / (2 <u_j, v>) over samples and normals.
  double factor_min = 1, factor_max = 1;
  bool positive = true;
  bool passed = true;
};

struct ToricBoundaryReport {
  bool exact = false;
  bool passed = true;
  double max_vanishing_residual = 0, max_derivative_residual = 0;
  double factor_min = 1, factor_max = 1;
  std::vector<FaceBoundaryResult> faces;
};

/// Samples the relative interior of every face and checks that H vanishes on
/// the face normals, differentiates to 2 <u_j, v> along inward transversals
/// (2 delta_jk for several normals) and is positive definite transverse to
/// the face normals.  Sampling is deterministic.
ToricBoundaryReport check_toric_boundary(const HessianField& field, const RationalDelzantPolytope& P,
                                         const BoundaryOptions& options = {});

/// Deterministic low-discrepancy points in the relative interior of a face,
/// every vertex weight at least `margin`.
std::vector<RationalVector> face_samples(const Face& face, const PolytopeReport& report, int count,
                                         const Rational& margin);

}  // namespace hamform::polytope
