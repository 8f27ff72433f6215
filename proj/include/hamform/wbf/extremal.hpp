// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include "hamform/orthotoric/profile.hpp"
#include "hamform/wbf/wbf.hpp"

namespace hamform::wbf {

struct ExtremalBase {
  int d = 1;
  Rational scal;  ///< scalar curvature of g_a, whose sign is the sign of x_a = -1/eta_a
};

struct ExtremalProfile {
  Polynomial q;        ///< F'' = p_check_c q, degree N + 1
  Polynomial F;
  Polynomial p_c;      ///< prod (t - eta_a)^{d_a}
  bool positive = false;  ///< F has the sign of p_c on (-1, 1)
  /// Solvability of the system with the top coefficient of q forced to 0
  /// (constant scalar curvature); set when requested.
  std::optional<bool> constant_scalar;
};

/// Order-one extremal profile over the given base factors.  Unknowns: the
/// N + 2 coefficients of q and two integration constants; equations:
/// F(+-1) = 0, F'(+-1) = -+2 p_c(+-1), q(eta_a) = scal_a prod_{b != a}(eta_a - eta_b).
/// Throws std::domain_error when the linear system is singular.
ExtremalProfile extremal_profile_l1(const std::vector<ExtremalBase>& base, const RationalVector& eta,
                                    bool check_constant_scalar = false);

struct BochnerFlatReport {
  bool passed = false;
  std::string pattern;  ///< "simplex" (degree m + 1) or "weighted" (degree m + 2)
  std::vector<BigInt> weights;
  Rational extra_root;
  std::string reason;
};

/// Exact check that a single Theta has the root pattern of a constant
/// holomorphic sectional curvature profile or of a weighted projective
/// Bochner-flat profile.
BochnerFlatReport bochner_flat_check(const orthotoric::ThetaProfile& profile);

}  // namespace hamform::wbf
