// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "hamform/exactmath/polynomial.hpp"

#include <sstream>

namespace hamform::exact {

RealPolynomial to_real(const Polynomial& p) {
  std::vector<double> c;
  c.reserve(p.coefficients().size());
  for (const auto& a : p.coefficients()) c.push_back(a.to_double());
  return RealPolynomial(std::move(c));
}

double eval(const Polynomial& p, double x) {
  return p.eval_as(x, [](const Rational& a) { return a.to_double(); });
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational a = p.coefficient(k);
    if (a.is_zero()) continue;
    if (!first) os << (a.sign() < 0 ? " - " : " + ");
    else if (a.sign() < 0) os << "-";
    Rational m = abs(a);
    if (k == 0 || m != Rational(1)) os << m;
    if (k > 0) {
      if (m != Rational(1)) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  const Rational lb = b.leading();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    Rational f = r[k] / lb;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coefficient(j);
  }
  r.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

std::vector<Polynomial> square_free_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free decomposition of the zero polynomial");
  std::vector<Polynomial> factors;
  if (p.degree() == 0) return factors;
  Polynomial dp = p.derivative();
  Polynomial a = gcd(p, dp);
  Polynomial b = divmod(p, a).first;
  Polynomial c = divmod(dp, a).first;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial f = gcd(b, d);
    factors.push_back(monic(f));
    b = divmod(b, f).first;
    c = divmod(d, f).first;
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  // Newton divided differences.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      Rational h = xs[i] - xs[i - j];
      if (h.is_zero()) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / h;
    }
  Polynomial p;
  for (std::size_t k = n; k-- > 0;) p = p * Polynomial::root_factor(xs[k]) + Polynomial::constant(dd[k]);
  return p;
}

Rational poly_integrate_interval(const Polynomial& p, const Rational& a, const Rational& b) {
  return p.integrate(a, b);
}

}  // namespace hamform::exact
