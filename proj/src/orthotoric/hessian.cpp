// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "hamform/orthotoric/profile.hpp"

#include <memory>

namespace hamform::orthotoric {

namespace {

// For one Theta the sum over j is the divided difference of
// Theta(t) Q_r(t) Q_s(t) at the roots of p(t) = prod (t - xi_j), where
// Q_r(t) = sigma_{r-1}(xi^_j) evaluated at t = xi_j.  That divided
// difference is the t^{m-1} coefficient of the remainder mod p, so H is a
// polynomial in sigma and stays defined when roots collide.
template <class T, class FromRational>
std::vector<std::vector<T>> single_theta_h(const Polynomial& theta, const std::vector<T>& sigma, const T& zero,
                                           FromRational lift) {
  const std::size_t m = sigma.size();
  std::vector<T> s(m + 1, zero);
  s[0] = lift(Rational(1));
  for (std::size_t r = 1; r <= m; ++r) s[r] = sigma[r - 1];
  // p(t) = t^m + sum_{i<m} p_i t^i
  std::vector<T> p(m, zero);
  for (std::size_t i = 0; i < m; ++i) p[i] = ((m - i) % 2) ? zero - s[m - i] : s[m - i];
  std::vector<std::vector<T>> Q(m);
  for (std::size_t r = 1; r <= m; ++r) {
    Q[r - 1].assign(r, zero);
    for (std::size_t i = 0; i < r; ++i) Q[r - 1][i] = (i % 2) ? zero - s[r - 1 - i] : s[r - 1 - i];
  }
  std::vector<T> th;
  for (const auto& a : theta.coefficients()) th.push_back(lift(a));
  auto mul = [&](const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> c(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return c;
  };
  std::vector<std::vector<T>> H(m, std::vector<T>(m, zero));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t q = r; q < m; ++q) {
      auto f = mul(mul(th, Q[r]), Q[q]);
      for (std::size_t k = f.size(); k-- > m;) {
        T c = f[k];
        for (std::size_t i = 0; i < m; ++i) f[k - m + i] = f[k - m + i] - c * p[i];
        f[k] = zero;
      }
      H[r][q] = H[q][r] = f.size() >= m ? f[m - 1] : zero;
    }
  return H;
}

}  // namespace

polytope::HessianField orthotoric_hessian_field(const ThetaProfile& profile) {
  profile.validate();
  const std::size_t m = profile.m();
  auto prof = std::make_shared<const ThetaProfile>(profile);

  polytope::HessianField::MatrixFn inverse;
  if (profile.single_theta) {
    inverse = [prof, m](const Eigen::VectorXd& sigma) {
      std::vector<double> s(sigma.data(), sigma.data() + m);
      auto h = single_theta_h<double>(prof->theta.front(), s, 0.0, [](const Rational& a) { return a.to_double(); });
      Eigen::MatrixXd H(m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) H(i, j) = h[i][j];
      return H;
    };
  } else {
    inverse = [prof, m](const Eigen::VectorXd& sigma) {
      std::vector<double> s(sigma.data(), sigma.data() + m);
      auto xi = sigma_to_roots(s, *prof, 1e-18);
      return orthotoric_H_closed(*prof, xi);
    };
  }
  auto hessian = [inverse, prof, m](const Eigen::VectorXd& sigma) {
    std::vector<double> s(sigma.data(), sigma.data() + m);
    auto xi = sigma_to_roots(s, *prof, 1e-18);
    orthotoric_H(*prof, xi);  // interior check
    return Eigen::MatrixXd(inverse(sigma).inverse());
  };
  polytope::HessianField field(m, inverse, hessian);

  if (profile.single_theta) {
    auto ray = [prof, m](const RationalVector& y, const RationalVector& v) {
      std::vector<Polynomial> s;
      for (std::size_t r = 0; r < m; ++r) s.push_back(Polynomial({y[r], v[r]}));
      auto h = single_theta_h<Polynomial>(prof->theta.front(), s, Polynomial(),
                                          [](const Rational& a) { return Polynomial::constant(a); });
      polytope::RayExpansion out;
      out.numerator = std::move(h);
      out.denominator = Polynomial::constant(Rational(1));
      return out;
    };
    auto exact_g = [prof, m](const RationalVector& y) {
      auto h = single_theta_h<Rational>(prof->theta.front(), y, Rational(), [](const Rational& a) { return a; });
      exact::RationalMatrix H(m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) H(i, j) = h[i][j];
      return exact::inverse(H);
    };
    field.with_exact(ray, exact_g);
  }
  return field;
}

}  // namespace hamform::orthotoric
