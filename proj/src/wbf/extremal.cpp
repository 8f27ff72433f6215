// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "hamform/wbf/extremal.hpp"

#include "hamform/exactmath/matrix.hpp"

#include <stdexcept>

namespace hamform::wbf {

ExtremalProfile extremal_profile_l1(const std::vector<ExtremalBase>& base, const RationalVector& eta,
                                    bool check_constant_scalar) {
  const std::size_t N = base.size();
  if (eta.size() != N) throw std::invalid_argument("extremal_profile_l1: base and eta differ in length");
  for (std::size_t a = 0; a < N; ++a) {
    if (base[a].d < 1) throw std::invalid_argument("extremal_profile_l1: d_a must be positive");
    if (!(exact::abs(eta[a]) > Rational(1))) throw std::invalid_argument("extremal_profile_l1: need |eta_a| > 1");
    for (std::size_t b = 0; b < a; ++b)
      if (eta[a] == eta[b]) throw std::invalid_argument("extremal_profile_l1: eta_a must be distinct");
  }
  const Rational one(1), two(2);
  Polynomial pc = Polynomial::constant(one), pcheck = Polynomial::constant(one);
  for (std::size_t a = 0; a < N; ++a) {
    pc *= Polynomial::root_factor(eta[a]).pow(base[a].d);
    pcheck *= Polynomial::root_factor(eta[a]).pow(base[a].d - 1);
  }
  // F = c0 + c1 (z + 1) + sum_k q_k G_k with G_k'' = pcheck t^k and G_k(-1) = G_k'(-1) = 0.
  const std::size_t nq = N + 2, unknowns = nq + 2;
  std::vector<Polynomial> G;
  for (std::size_t k = 0; k < nq; ++k) {
    auto g1 = (pcheck * Polynomial::monomial(one, static_cast<int>(k))).antiderivative();
    g1 -= Polynomial::constant(g1(-one));
    auto g2 = g1.antiderivative();
    g2 -= Polynomial::constant(g2(-one));
    G.push_back(std::move(g2));
  }
  const std::size_t rows = unknowns + (check_constant_scalar ? 1 : 0);
  exact::RationalMatrix A(rows, unknowns);
  RationalVector rhs(rows);
  const std::size_t c0 = nq, c1 = nq + 1;
  A(0, c0) = one;  // F(-1) = 0
  A(1, c1) = one;  // F'(-1) = 2 p_c(-1)
  rhs[1] = two * pc(-one);
  A(2, c0) = one;  // F(1) = 0
  A(2, c1) = two;
  A(3, c1) = one;  // F'(1) = -2 p_c(1)
  rhs[3] = -two * pc(one);
  for (std::size_t k = 0; k < nq; ++k) {
    A(2, k) = G[k](one);
    A(3, k) = G[k].derivative()(one);
  }
  for (std::size_t a = 0; a < N; ++a) {
    Rational prod = one;
    for (std::size_t b = 0; b < N; ++b)
      if (b != a) prod *= eta[a] - eta[b];
    for (std::size_t k = 0; k < nq; ++k) A(4 + a, k) = exact::pow(eta[a], static_cast<int>(k));
    rhs[4 + a] = base[a].scal * prod;
  }
  exact::RationalMatrix square(unknowns, unknowns);
  RationalVector srhs(rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(unknowns));
  for (std::size_t i = 0; i < unknowns; ++i)
    for (std::size_t j = 0; j < unknowns; ++j) square(i, j) = A(i, j);
  auto sol = exact::solve(square, srhs);
  if (!sol) {
    std::string msg = "extremal_profile_l1: singular system for eta = (";
    for (std::size_t a = 0; a < N; ++a) msg += (a ? ", " : "") + eta[a].str();
    throw std::domain_error(msg + ")");
  }
  ExtremalProfile out;
  out.p_c = pc;
  out.q = Polynomial(RationalVector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(nq)));
  Polynomial F = Polynomial::constant((*sol)[c0]) + (*sol)[c1] * Polynomial({one, one});
  for (std::size_t k = 0; k < nq; ++k) F += (*sol)[k] * G[k];
  out.F = F;
  if (!F.is_zero()) {
    auto inner = exact::real_roots(F, exact::RealInterval::open(-one, one));
    out.positive = inner.empty() && (F(Rational(0)) * pc(Rational(0))).sign() > 0;
  }
  if (check_constant_scalar) {
    A(unknowns, nq - 1) = one;  // top coefficient of q vanishes
    exact::RationalMatrix aug(rows, unknowns + 1);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < unknowns; ++j) aug(i, j) = A(i, j);
      aug(i, unknowns) = rhs[i];
    }
    out.constant_scalar = exact::rank(A) == exact::rank(aug);
  }
  return out;
}

BochnerFlatReport bochner_flat_check(const orthotoric::ThetaProfile& profile) {
  BochnerFlatReport rep;
  if (!profile.single_theta) {
    rep.reason = "profile uses more than one function";
    return rep;
  }
  const auto& theta = profile.theta.front();
  RationalVector betas;
  for (const auto& [a, b] : profile.intervals) {
    if (betas.empty() || betas.back() != a) betas.push_back(a);
    betas.push_back(b);
  }
  const std::size_t m = profile.m();
  if (betas.size() != m + 1) {
    rep.reason = "intervals are not consecutive";
    return rep;
  }
  auto [quot, rem] = exact::divmod(theta, Polynomial::from_roots(betas));
  if (!rem.is_zero()) {
    rep.reason = "Theta does not vanish at every endpoint";
    return rep;
  }
  if (quot.degree() == 0) {
    rep.pattern = "simplex";
    rep.passed = true;
    return rep;
  }
  if (quot.degree() != 1) {
    rep.reason = "Theta has degree " + std::to_string(theta.degree()) + ", expected m + 1 or m + 2";
    return rep;
  }
  rep.extra_root = -quot.coefficient(0) / quot.coefficient(1);
  // beta - beta_j = a_j / prod_k a_k with pairwise coprime positive integers a_j
  RationalVector delta;
  for (const auto& b : betas) delta.push_back(exact::abs(rep.extra_root - b));
  const int sign = (rep.extra_root - betas.front()).sign();
  for (const auto& b : betas)
    if ((rep.extra_root - b).sign() != sign || sign == 0) {
      rep.reason = "extra root lies between the endpoints";
      return rep;
    }
  BigInt L = 1;
  for (const auto& v : delta) L = lcm(L, v.den());
  BigInt g = 0;
  for (const auto& v : delta) g = exact::gcd(g, (v * Rational(L)).num());
  BigInt prod = 1;
  for (const auto& v : delta) {
    BigInt a = (v * Rational(L)).num() / g;
    rep.weights.push_back(a);
    prod *= a;
  }
  for (std::size_t i = 0; i < rep.weights.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (exact::gcd(rep.weights[i], rep.weights[j]) != 1) {
        rep.reason = "weights are not pairwise coprime";
        return rep;
      }
  for (std::size_t j = 0; j < delta.size(); ++j)
    if (delta[j] != Rational(rep.weights[j], prod)) {
      rep.reason = "endpoint offsets are not a_j / prod a_k";
      return rep;
    }
  rep.pattern = "weighted";
  rep.passed = true;
  return rep;
}

}  // namespace hamform::wbf
