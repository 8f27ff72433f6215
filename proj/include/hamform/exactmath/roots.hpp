// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include "hamform/exactmath/polynomial.hpp"

#include <optional>
#include <vector>

namespace hamform::exact {

/// Interval of the real line with optional (infinite) ends.
struct RealInterval {
  std::optional<Rational> lower, upper;
  bool lower_open = false, upper_open = false;

  static RealInterval whole_line() { return {}; }
  static RealInterval closed(Rational a, Rational b) { return {std::move(a), std::move(b), false, false}; }
  static RealInterval open(Rational a, Rational b) { return {std::move(a), std::move(b), true, true}; }

  bool contains(const Rational& x) const;
};

struct RealRoot {
  double value = 0;
  int multiplicity = 1;
  /// Isolating interval; lower == upper when the root was hit exactly.
  Rational lower, upper;
  bool exact() const { return lower == upper; }
};

/// Sturm sequence of a polynomial: p, p', -rem(p, p'), ...
std::vector<Polynomial> sturm_sequence(const Polynomial& p);
/// Number of sign changes of the sequence at x (zeros skipped).
int sign_variations(const std::vector<Polynomial>& seq, const Rational& x);

/// Real roots of p in the interval, sorted ascending, each refined by exact
/// bisection until its isolating interval is narrower than tol.  Multiplicity
/// comes from the square-free factorisation.  The zero polynomial is rejected.
std::vector<RealRoot> real_roots(const Polynomial& p, const RealInterval& where = RealInterval::whole_line(),
                                 double tol = 1e-12);

/// Bound B with every complex root of p satisfying |z| < B.
Rational cauchy_root_bound(const Polynomial& p);

}  // namespace hamform::exact
