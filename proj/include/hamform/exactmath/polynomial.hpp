// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include "hamform/exactmath/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamform::exact {

/// Dense univariate polynomial, coefficients in ascending degree order.
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// no coefficients and degree -1.
template <class T>
class BasicPolynomial {
public:
  BasicPolynomial() = default;
  explicit BasicPolynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static BasicPolynomial constant(const T& a) { return BasicPolynomial(std::vector<T>{a}); }
  /// a*t^k
  static BasicPolynomial monomial(const T& a, int k) {
    std::vector<T> c(static_cast<std::size_t>(k) + 1);
    c[k] = a;
    return BasicPolynomial(std::move(c));
  }
  /// t - r
  static BasicPolynomial root_factor(const T& r) { return BasicPolynomial(std::vector<T>{-r, T(1)}); }
  /// Monic polynomial with the given roots, counted with repetition.
  static BasicPolynomial from_roots(std::span<const T> roots) {
    BasicPolynomial p = constant(T(1));
    for (const auto& r : roots) p *= root_factor(r);
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }
  T coefficient(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation in another scalar type, e.g. a rational polynomial at a double.
  template <class U, class Cast>
  U eval_as(const U& x, Cast cast) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + cast(*it);
    return acc;
  }

  BasicPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
    return BasicPolynomial(std::move(d));
  }

  /// Antiderivative vanishing at 0.
  BasicPolynomial antiderivative() const {
    if (c_.empty()) return {};
    std::vector<T> a(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / T(static_cast<long>(k + 1));
    return BasicPolynomial(std::move(a));
  }

  T integrate(const T& a, const T& b) const {
    auto P = antiderivative();
    return P(b) - P(a);
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }
  BasicPolynomial& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator-(BasicPolynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return BasicPolynomial(std::move(c));
  }
  friend BasicPolynomial operator*(const T& s, BasicPolynomial a) { return a *= s; }
  friend BasicPolynomial operator*(BasicPolynomial a, const T& s) { return a *= s; }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

  BasicPolynomial pow(int k) const {
    BasicPolynomial r = constant(T(1)), base = *this;
    while (k > 0) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  /// p(a t + b)
  BasicPolynomial compose_linear(const T& a, const T& b) const {
    BasicPolynomial lin(std::vector<T>{b, a}), r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
    return r;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using Polynomial = BasicPolynomial<Rational>;
using RealPolynomial = BasicPolynomial<double>;

RealPolynomial to_real(const Polynomial& p);
double eval(const Polynomial& p, double x);
std::string to_string(const Polynomial& p, const std::string& var = "t");

/// Quotient and remainder of exact division, b nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor; zero when both inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial monic(const Polynomial& p);

/// Square-free factorisation p = lc * prod_i f_i^i (Yun).  Entry i-1 holds
/// f_i; trailing unit factors are dropped.
std::vector<Polynomial> square_free_decomposition(const Polynomial& p);

/// Interpolating polynomial of minimal degree through (x_i, y_i), distinct x_i.
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// Elementary symmetric polynomials sigma_0..sigma_n of the entries.
template <class T>
std::vector<T> elem_sym(std::span<const T> values) {
  std::vector<T> s(values.size() + 1, T(0));
  s[0] = T(1);
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t r = i + 1; r > 0; --r) s[r] += s[r - 1] * values[i];
  return s;
}

/// elem_sym with entry `skip` omitted.
template <class T>
std::vector<T> elem_sym_without(std::span<const T> values, std::size_t skip) {
  std::vector<T> rest;
  rest.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (i != skip) rest.push_back(values[i]);
  return elem_sym<T>(rest);
}

/// Exact integral of p over [a, b].
Rational poly_integrate_interval(const Polynomial& p, const Rational& a, const Rational& b);

}  // namespace hamform::exact
