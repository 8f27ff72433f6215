// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include "hamform/exactmath/roots.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hamform::wbf {

using exact::BigInt;
using exact::Polynomial;
using exact::Rational;
using exact::RationalVector;
using exact::RealPolynomial;
using exact::RealRoot;

/// Sparse polynomial in x_1..x_n with rational coefficients.
class MultiPolynomial {
 public:
  using Exponent = std::vector<int>;

  MultiPolynomial() = default;
  explicit MultiPolynomial(std::size_t nvars) : n_(nvars) {}
  static MultiPolynomial constant(std::size_t nvars, const Rational& c);
  static MultiPolynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return n_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree_in(std::size_t i) const;

  Rational operator()(const RationalVector& x) const;
  double operator()(const std::vector<double>& x) const;
  MultiPolynomial derivative(std::size_t i) const;
  /// Univariate polynomial in x_i with the other variables substituted.
  Polynomial restrict_to(std::size_t i, const RationalVector& others) const;

  MultiPolynomial& operator+=(const MultiPolynomial& o);
  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b);
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
  friend MultiPolynomial operator*(const Rational& s, MultiPolynomial a);
  friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

 private:
  void add_term(const Exponent& e, const Rational& c);
  std::size_t n_ = 0;
  std::map<Exponent, Rational> terms_;
};

std::string to_string(const MultiPolynomial& p);

/// Projective line bundle over a product of Kahler-Einstein factors S_a of
/// complex dimension d_a with Ricci form s_a omega_a.  degrees holds the
/// bundle degrees k_a for projective-space factors (L_a = O(k_a)); empty
/// when the factors are not projective spaces.
struct LineBundleProblem {
  std::string name;
  std::vector<int> d;
  RationalVector s;
  std::vector<BigInt> degrees;

  std::size_t N() const { return d.size(); }
  void validate() const;
  /// "koiso-sakane d k" or "cp2xcp3"; throws std::invalid_argument otherwise.
  static LineBundleProblem preset(const std::string& name);
};

/// Parses an Einstein constant; only rationals ("p", "p/q", decimals) are
/// accepted, anything else throws std::invalid_argument.
Rational parse_einstein_constant(const std::string& text);

/// p~_c(t) = prod_b (x_b t + 1)^{d_b} with x symbolic, as coefficients of t.
std::vector<MultiPolynomial> scaled_constant_part(const LineBundleProblem& p);
/// h_a(x) = int_{-1}^{1} p~_c(t) H_a(t) dt,
/// H_a(t) = x_a (x_a s_a - 1)(1 - t^2) + t (1 - x_a^2), integrated exactly.
MultiPolynomial h_exact(const LineBundleProblem& p, std::size_t a);
/// N = 1: h as a polynomial in x.
Polynomial h_univariate(const LineBundleProblem& p);

/// p_c(t) = prod_a (t + 1/x_a)^{d_a}.
Polynomial constant_part(const LineBundleProblem& p, const RationalVector& x);
RealPolynomial constant_part(const LineBundleProblem& p, const std::vector<double>& x);

/// B from int p_c (B (t^2 - 1) - 2t) dt = 0.  Throws std::domain_error when
/// the denominator vanishes.
Rational solve_B(const RationalVector& x, const LineBundleProblem& p);
double solve_B(const std::vector<double>& x, const LineBundleProblem& p);

/// F(z) = int_{-1}^z p_c(t) (B (t^2 - 1) - 2t) dt.
Polynomial build_F(const LineBundleProblem& p, const RationalVector& x, const Rational& B);
RealPolynomial build_F(const LineBundleProblem& p, const std::vector<double>& x, double B);

struct WbfSolution {
  std::vector<double> x;
  double B = 0;
  RealPolynomial F;
  std::vector<double> h;             ///< h_a at x
  std::vector<double> ca_residuals;  ///< B (1 - x_a^2) - 2 x_a (x_a s_a - 1)
  double boundary_residual = 0;      ///< F(+-1) and F'(+-1) +- 2 p_c(+-1)
  bool sign_ok = false;              ///< F has the sign of p_c on 50 interior samples
  bool is_einstein = false;          ///< |B| < 1e-10
  bool passed = false;
};

struct WbfOptions {
  double grid_step = 0.05;
  double tol = 1e-12;         ///< Newton stop on max |h_a|
  double ca_tol = 1e-10;
  int max_iterations = 100;
  int max_halvings = 20;
  double dedupe_radius = 1e-6;
  double min_abs_x = 1e-4;    ///< roots closer to x_a = 0 are the trivial branch
};

struct WbfSolveResult {
  std::vector<WbfSolution> solutions;  ///< sorted lexicographically by x
  std::vector<std::pair<std::vector<double>, std::string>> rejected;
  std::size_t seeds = 0;
};

WbfSolveResult solve_wbf(const LineBundleProblem& p, const WbfOptions& options = {});
/// Completes a root x of h into a solution (B, F, residuals).
WbfSolution complete_solution(const LineBundleProblem& p, const std::vector<double>& x, double ca_tol = 1e-10);

enum class ExistenceVerdict { Exists, NoRoot, NotCovered };
const char* to_string(ExistenceVerdict v);

struct SignConditionReport {
  int d = 0;
  Rational s;
  Polynomial h;
  Rational h_at_0, dh_at_0, h_at_1;
  bool dh_matches = false;    ///< h'(0) = 2(d - 2)/3
  bool sign_matches = false;  ///< sign h(1) = sign(s - 1)
  bool boundary_case = false; ///< h(1) = 0
  ExistenceVerdict verdict = ExistenceVerdict::NotCovered;
  std::string reason;
  std::vector<RealRoot> roots;  ///< roots of h in (0, 1), exact isolation
  bool consistent = false;      ///< verdict agrees with the roots found
};

/// N = 1 only; throws std::invalid_argument otherwise.
SignConditionReport check_sign_conditions(const LineBundleProblem& p);

struct FactorIntegrality {
  std::optional<BigInt> degree;
  bool einstein_matches = true;   ///< s_a k_a = d_a + 1
  double chern[2] = {0, 0};       ///< c_1(L_{j,a}) in units of the primitive class, j = 0, 1
  bool chern_integral = true;
  std::optional<bool> blowdown_normalized;
};

struct IntegrityReport {
  bool s_rational = true;
  bool exact = false;
  std::vector<FactorIntegrality> factors;
  bool passed = false;
};

/// Integrality of the bundle data at a solution.  With exact x the Chern
/// coefficients are rational and compared exactly; otherwise within tol.
IntegrityReport check_integrality(const LineBundleProblem& p, const std::vector<double>& x, double tol = 1e-9);
IntegrityReport check_integrality(const LineBundleProblem& p, const RationalVector& x);

/// Single blow-down over the first of two CP^1 factors: x_1 = 1 pinned,
/// (F'/p_c)(-1) = K, unknown x_2 in (-1, 0) with Einstein constant s_2.
struct BlowdownProblem {
  Rational s1{2}, s2{-2}, K{4};
};

struct BlowdownReport {
  Polynomial f;                  ///< f(x) = int (t+1)(xt+1) H(t) dt
  Rational f_at_minus1, f_at_0, df_at_0, f_at_minus_half;
  bool consistent = false;       ///< K = 2 s_1, the pinned factor's Einstein constant
  std::string diagnostic;
  std::vector<RealRoot> roots;   ///< in (-1, 0)
  bool not_einstein = false;     ///< f(-1/2) != 0 exactly
  std::vector<WbfSolution> solutions;
  bool passed = false;
};

BlowdownReport solve_blowdown(const BlowdownProblem& p = {});

/// (d_1, d_2, k_1, k_2) instances of the two-factor existence regimes over
/// CP^{d1} x CP^{d2}: k_a > d_a + 1 for both, or 1 <= k_1 <= d_1 with
/// 1 <= -k_2 <= d_2.
std::vector<LineBundleProblem> two_factor_regime_instances(int max_dim, int max_degree);

}  // namespace hamform::wbf
