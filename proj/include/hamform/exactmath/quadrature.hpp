// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include <vector>

namespace hamform::exact {

struct QuadratureRule {
  std::vector<double> nodes, weights;

  /// Applies the rule, mapped affinely from [-1, 1] to [a, b].
  template <class F>
  double integrate(F&& f, double a = -1, double b = 1) const {
    const double h = 0.5 * (b - a), c = 0.5 * (a + b);
    double s = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(c + h * nodes[i]);
    return h * s;
  }
};

/// n-point Gauss-Legendre rule on [-1, 1], 1 <= n <= 64.  Nodes ascending.
QuadratureRule gauss_legendre(int n);

}  // namespace hamform::exact
