// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "hamform/wbf/wbf.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace hamform::wbf {

// ---- MultiPolynomial ------------------------------------------------------

MultiPolynomial MultiPolynomial::constant(std::size_t nvars, const Rational& c) {
  MultiPolynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPolynomial MultiPolynomial::variable(std::size_t nvars, std::size_t i) {
  MultiPolynomial p(nvars);
  Exponent e(nvars, 0);
  e.at(i) = 1;
  p.add_term(e, Rational(1));
  return p;
}

void MultiPolynomial::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPolynomial::degree_in(std::size_t i) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

Rational MultiPolynomial::operator()(const RationalVector& x) const {
  if (x.size() != n_) throw std::invalid_argument("MultiPolynomial: wrong number of values");
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < n_; ++i)
      if (e[i]) t *= exact::pow(x[i], e[i]);
    sum += t;
  }
  return sum;
}

double MultiPolynomial::operator()(const std::vector<double>& x) const {
  if (x.size() != n_) throw std::invalid_argument("MultiPolynomial: wrong number of values");
  double sum = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < n_; ++i)
      if (e[i]) t *= std::pow(x[i], e[i]);
    sum += t;
  }
  return sum;
}

MultiPolynomial MultiPolynomial::derivative(std::size_t i) const {
  MultiPolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    out.add_term(f, c * Rational(e[i]));
  }
  return out;
}

Polynomial MultiPolynomial::restrict_to(std::size_t i, const RationalVector& others) const {
  if (others.size() != n_) throw std::invalid_argument("restrict_to: wrong number of values");
  std::vector<Rational> coeffs(std::max(degree_in(i), 0) + 1);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t k = 0; k < n_; ++k)
      if (k != i && e[k]) t *= exact::pow(others[k], e[k]);
    coeffs[e[i]] += t;
  }
  return Polynomial(coeffs);
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) {
  for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
  return a;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
  MultiPolynomial out(std::max(a.n_, b.n_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPolynomial::Exponent e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPolynomial operator*(const Rational& s, MultiPolynomial a) {
  if (s.is_zero()) return MultiPolynomial(a.n_);
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

std::string to_string(const MultiPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest total degree first
  std::vector<std::pair<MultiPolynomial::Exponent, Rational>> terms(p.terms().rbegin(), p.terms().rend());
  for (const auto& [e, c] : terms) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational a = exact::abs(c);
    bool unit = a == Rational(1);
    bool any = false;
    if (!unit) os << a.str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!unit || any) os << "*";
      os << "x" << i + 1;
      if (e[i] > 1) os << "^" << e[i];
      any = true;
    }
    if (unit && !any) os << "1";
  }
  return os.str();
}

// ---- problem data ---------------------------------------------------------

void LineBundleProblem::validate() const {
  if (d.empty()) throw std::invalid_argument("line bundle problem needs at least one base factor");
  if (s.size() != d.size()) throw std::invalid_argument("line bundle problem: d and s differ in length");
  if (!degrees.empty() && degrees.size() != d.size())
    throw std::invalid_argument("line bundle problem: degrees and d differ in length");
  for (int v : d)
    if (v < 1) throw std::invalid_argument("line bundle problem: d_a must be positive");
  for (const auto& k : degrees)
    if (k == 0) throw std::invalid_argument("line bundle problem: bundle degrees must be nonzero");
}

LineBundleProblem LineBundleProblem::preset(const std::string& name) {
  static const std::regex ks(R"(\s*koiso-sakane\s+(\d+)\s+(\d+)\s*)");
  std::smatch m;
  LineBundleProblem p;
  p.name = name;
  if (std::regex_match(name, m, ks)) {
    const int d = std::stoi(m[1]), k = std::stoi(m[2]);
    if (d < 1 || k < 1 || k > d) throw std::invalid_argument("koiso-sakane preset needs 1 <= k <= d");
    Rational s(BigInt(d + 1), BigInt(k));
    p.d = {d, d};
    p.s = {s, -s};
    p.degrees = {BigInt(k), BigInt(-k)};
    return p;
  }
  if (name == "cp2xcp3") {
    p.d = {2, 3};
    p.s = {Rational(3), Rational(-2)};
    p.degrees = {BigInt(1), BigInt(-2)};
    return p;
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

Rational parse_einstein_constant(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("Einstein constant '" + text + "' is not a rational number");
  }
}

std::vector<MultiPolynomial> scaled_constant_part(const LineBundleProblem& p) {
  const std::size_t n = p.N();
  std::vector<MultiPolynomial> poly{MultiPolynomial::constant(n, Rational(1))};
  for (std::size_t b = 0; b < n; ++b) {
    auto xb = MultiPolynomial::variable(n, b);
    for (int k = 0; k < p.d[b]; ++k) {
      std::vector<MultiPolynomial> next(poly.size() + 1, MultiPolynomial(n));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        next[i + 1] += xb * poly[i];
      }
      poly = std::move(next);
    }
  }
  return poly;
}

MultiPolynomial h_exact(const LineBundleProblem& p, std::size_t a) {
  p.validate();
  if (a >= p.N()) throw std::out_of_range("h_exact: factor index out of range");
  const std::size_t n = p.N();
  auto pc = scaled_constant_part(p);
  auto xa = MultiPolynomial::variable(n, a);
  auto one = MultiPolynomial::constant(n, Rational(1));
  auto k = xa * (p.s[a] * xa - one);  // x_a (x_a s_a - 1)
  // H_a = k (1 - t^2) + t (1 - x_a^2)
  std::vector<MultiPolynomial> H{k, one - xa * xa, Rational(-1) * k};
  MultiPolynomial h(n);
  for (std::size_t i = 0; i < pc.size(); ++i)
    for (std::size_t j = 0; j < H.size(); ++j) {
      const std::size_t deg = i + j;
      if (deg % 2) continue;  // odd powers integrate to zero over [-1, 1]
      h += Rational(BigInt(2), BigInt(deg + 1)) * (pc[i] * H[j]);
    }
  return h;
}

Polynomial h_univariate(const LineBundleProblem& p) {
  if (p.N() != 1) throw std::invalid_argument("h_univariate needs exactly one base factor");
  return h_exact(p, 0).restrict_to(0, {Rational()});
}

Polynomial constant_part(const LineBundleProblem& p, const RationalVector& x) {
  if (x.size() != p.N()) throw std::invalid_argument("constant_part: wrong number of x values");
  Polynomial pc = Polynomial::constant(Rational(1));
  for (std::size_t a = 0; a < p.N(); ++a) {
    if (x[a].is_zero()) throw std::domain_error("constant_part: x_a = 0");
    pc *= Polynomial::root_factor(Rational(-1) / x[a]).pow(p.d[a]);
  }
  return pc;
}

RealPolynomial constant_part(const LineBundleProblem& p, const std::vector<double>& x) {
  if (x.size() != p.N()) throw std::invalid_argument("constant_part: wrong number of x values");
  RealPolynomial pc = RealPolynomial::constant(1.0);
  for (std::size_t a = 0; a < p.N(); ++a) {
    if (x[a] == 0) throw std::domain_error("constant_part: x_a = 0");
    pc *= RealPolynomial::root_factor(-1 / x[a]).pow(p.d[a]);
  }
  return pc;
}

namespace {

template <class Poly, class T>
T solve_B_impl(const Poly& pc, T one) {
  Poly t2m1({-one, T(0) * one, one});
  Poly two_t({T(0) * one, one + one});
  T num = (pc * two_t).integrate(-one, one);
  T den = (pc * t2m1).integrate(-one, one);
  if (den == T(0) * one) throw std::domain_error("solve_B: the integral of p_c (t^2 - 1) vanishes");
  return num / den;
}

template <class Poly, class T>
Poly build_F_impl(const Poly& pc, const T& B, T one) {
  Poly inner({-B, T(0) * one - one - one, B});  // B (t^2 - 1) - 2t
  Poly anti = (pc * inner).antiderivative();
  return anti - Poly::constant(anti(-one));
}

}  // namespace

Rational solve_B(const RationalVector& x, const LineBundleProblem& p) {
  return solve_B_impl(constant_part(p, x), Rational(1));
}

double solve_B(const std::vector<double>& x, const LineBundleProblem& p) {
  double B = solve_B_impl(constant_part(p, x), 1.0);
  if (!std::isfinite(B)) throw std::domain_error("solve_B: denominator underflow");
  return B;
}

Polynomial build_F(const LineBundleProblem& p, const RationalVector& x, const Rational& B) {
  return build_F_impl(constant_part(p, x), B, Rational(1));
}

RealPolynomial build_F(const LineBundleProblem& p, const std::vector<double>& x, double B) {
  return build_F_impl(constant_part(p, x), B, 1.0);
}

namespace {

double boundary_residual(const RealPolynomial& F, const RealPolynomial& pc, double K_minus = 2) {
  auto dF = F.derivative();
  double r = std::max(std::abs(F(1.0)), std::abs(F(-1.0)));
  r = std::max(r, std::abs(dF(1.0) + 2 * pc(1.0)));
  r = std::max(r, std::abs(dF(-1.0) - K_minus * pc(-1.0)));
  return r;
}

bool sign_matches(const RealPolynomial& F, const RealPolynomial& pc) {
  for (int i = 1; i <= 50; ++i) {
    double z = -1 + 2.0 * i / 51;
    if (!(F(z) * pc(z) > 0)) return false;
  }
  return true;
}

}  // namespace

WbfSolution complete_solution(const LineBundleProblem& p, const std::vector<double>& x, double ca_tol) {
  WbfSolution sol;
  sol.x = x;
  sol.B = solve_B(x, p);
  sol.F = build_F(p, x, sol.B);
  auto pc = constant_part(p, x);
  for (std::size_t a = 0; a < p.N(); ++a) {
    sol.h.push_back(h_exact(p, a)(x));
    const double s = p.s[a].to_double();
    sol.ca_residuals.push_back(sol.B * (1 - x[a] * x[a]) - 2 * x[a] * (x[a] * s - 1));
  }
  sol.boundary_residual = boundary_residual(sol.F, pc);
  sol.sign_ok = sign_matches(sol.F, pc);
  sol.is_einstein = std::abs(sol.B) < 1e-10;
  double ca = 0;
  for (double r : sol.ca_residuals) ca = std::max(ca, std::abs(r));
  sol.passed = ca <= ca_tol && sol.boundary_residual <= 1e-10 && sol.sign_ok;
  return sol;
}

// ---- Newton multistart ----------------------------------------------------

namespace {

struct System {
  std::vector<MultiPolynomial> h;
  std::vector<std::vector<MultiPolynomial>> jac;

  Eigen::VectorXd value(const std::vector<double>& x) const {
    Eigen::VectorXd v(h.size());
    for (std::size_t a = 0; a < h.size(); ++a) v[a] = h[a](x);
    return v;
  }
  Eigen::MatrixXd jacobian(const std::vector<double>& x) const {
    Eigen::MatrixXd J(h.size(), h.size());
    for (std::size_t a = 0; a < h.size(); ++a)
      for (std::size_t b = 0; b < h.size(); ++b) J(a, b) = jac[a][b](x);
    return J;
  }
};

std::optional<std::vector<double>> newton(const System& sys, std::vector<double> x, const WbfOptions& o) {
  const std::size_t n = x.size();
  Eigen::VectorXd r = sys.value(x);
  double norm = r.cwiseAbs().maxCoeff();
  int polish = 0;
  for (int it = 0; it < o.max_iterations; ++it) {
    if (norm < o.tol && polish >= 2) return x;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sys.jacobian(x));
    if (lu.rank() < static_cast<Eigen::Index>(n)) return std::nullopt;
    Eigen::VectorXd step = lu.solve(-r);
    double t = 1;
    bool accepted = false;
    for (int k = 0; k <= o.max_halvings; ++k, t *= 0.5) {
      std::vector<double> y(x);
      for (std::size_t i = 0; i < n; ++i) y[i] += t * step[i];
      Eigen::VectorXd ry = sys.value(y);
      double ny = ry.cwiseAbs().maxCoeff();
      if (!std::isfinite(ny)) continue;
      // once converged, polishing steps may stall at rounding level
      if (ny < norm || (norm < o.tol && ny < 10 * o.tol)) {
        x = std::move(y);
        r = ry;
        norm = ny;
        accepted = true;
        break;
      }
    }
    if (!accepted) return norm < o.tol ? std::optional(x) : std::nullopt;
    if (norm < o.tol) ++polish;
  }
  return norm < o.tol ? std::optional(x) : std::nullopt;
}

std::vector<std::vector<int>> sign_boxes(const LineBundleProblem& p) {
  std::vector<std::vector<int>> choices;
  for (std::size_t a = 0; a < p.N(); ++a) {
    const int sg = p.s[a].sign();
    const bool both = p.N() <= 2 || sg == 0 || exact::abs(p.s[a] * Rational(p.d[a])) <= Rational(1);
    if (both) choices.push_back({1, -1});
    else choices.push_back({sg});
  }
  std::vector<std::vector<int>> boxes{{}};
  for (const auto& c : choices) {
    std::vector<std::vector<int>> next;
    for (const auto& b : boxes)
      for (int s : c) {
        auto e = b;
        e.push_back(s);
        next.push_back(std::move(e));
      }
    boxes = std::move(next);
  }
  return boxes;
}

}  // namespace

WbfSolveResult solve_wbf(const LineBundleProblem& p, const WbfOptions& o) {
  p.validate();
  if (!(o.grid_step > 0 && o.grid_step < 0.5)) throw std::invalid_argument("solve_wbf: grid_step must be in (0, 0.5)");
  if (!(o.tol > 0)) throw std::invalid_argument("solve_wbf: tol must be positive");
  const std::size_t n = p.N();
  System sys;
  for (std::size_t a = 0; a < n; ++a) {
    sys.h.push_back(h_exact(p, a));
    std::vector<MultiPolynomial> row;
    for (std::size_t b = 0; b < n; ++b) row.push_back(sys.h.back().derivative(b));
    sys.jac.push_back(std::move(row));
  }
  std::vector<double> grid;
  for (int k = 1; k * o.grid_step < 1 - 1e-12; ++k) grid.push_back(k * o.grid_step);

  WbfSolveResult out;
  std::vector<std::vector<double>> roots;
  for (const auto& box : sign_boxes(p)) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      std::vector<double> seed(n);
      for (std::size_t a = 0; a < n; ++a) seed[a] = box[a] * grid[idx[a]];
      ++out.seeds;
      if (auto x = newton(sys, seed, o)) {
        bool inside = true;
        for (double v : *x) inside = inside && std::abs(v) >= o.min_abs_x && std::abs(v) < 1;
        bool dup = false;
        for (const auto& r : roots) {
          double dist = 0;
          for (std::size_t a = 0; a < n; ++a) dist = std::max(dist, std::abs(r[a] - (*x)[a]));
          dup = dup || dist <= o.dedupe_radius;
        }
        if (inside && !dup) roots.push_back(*x);
      }
      std::size_t a = 0;
      while (a < n && ++idx[a] == grid.size()) idx[a++] = 0;
      if (a == n) break;
    }
  }
  std::sort(roots.begin(), roots.end());
  for (const auto& x : roots) {
    std::string why;
    for (std::size_t a = 0; a < n && why.empty(); ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (std::abs(x[a] - x[b]) <= o.dedupe_radius && p.s[a] != p.s[b]) {
          why = "x_" + std::to_string(a + 1) + " = x_" + std::to_string(b + 1) + " with different s";
          break;
        }
    if (!why.empty()) {
      out.rejected.emplace_back(x, why);
      continue;
    }
    out.solutions.push_back(complete_solution(p, x, o.ca_tol));
  }
  return out;
}

// ---- sign conditions ------------------------------------------------------

const char* to_string(ExistenceVerdict v) {
  switch (v) {
    case ExistenceVerdict::Exists: return "exists";
    case ExistenceVerdict::NoRoot: return "no-root";
    case ExistenceVerdict::NotCovered: return "not-covered";
  }
  return "?";
}

SignConditionReport check_sign_conditions(const LineBundleProblem& p) {
  p.validate();
  if (p.N() != 1) throw std::invalid_argument("check_sign_conditions needs exactly one base factor");
  SignConditionReport r;
  r.d = p.d[0];
  r.s = p.s[0];
  r.h = h_univariate(p);
  r.h_at_0 = r.h(Rational(0));
  r.dh_at_0 = r.h.derivative()(Rational(0));
  r.h_at_1 = r.h(Rational(1));
  r.dh_matches = r.dh_at_0 == Rational(BigInt(2 * (r.d - 2)), BigInt(3));
  r.sign_matches = r.h_at_1.sign() == (r.s - Rational(1)).sign();
  r.boundary_case = r.h_at_1.is_zero();

  const Rational& s = r.s;
  if (r.d >= 3 && s.is_zero()) {
    r.verdict = ExistenceVerdict::Exists;
    r.reason = "Ricci-flat base of dimension >= 3";
  } else if (r.d >= 3 && s.sign() < 0) {
    r.verdict = ExistenceVerdict::Exists;
    r.reason = "negative Kahler-Einstein base of dimension >= 3";
  } else if (r.d >= 2 && s.sign() > 0 && s < Rational(1)) {
    r.verdict = ExistenceVerdict::Exists;
    r.reason = "positive Kahler-Einstein base of dimension >= 2 with q > p";
  } else if (r.d == 2) {
    r.verdict = ExistenceVerdict::NoRoot;
    r.reason = "dimension 2 requires 0 < s < 1";
  } else if (r.d == 1) {
    r.verdict = s > Rational(1) ? ExistenceVerdict::Exists : ExistenceVerdict::NoRoot;
    r.reason = "dimension 1 requires s > 1";
  } else {
    r.verdict = ExistenceVerdict::NotCovered;
    r.reason = "s >= 1 in dimension >= 3";
  }
  if (!r.h.is_zero()) r.roots = exact::real_roots(r.h, exact::RealInterval::open(Rational(0), Rational(1)));
  switch (r.verdict) {
    case ExistenceVerdict::Exists: r.consistent = !r.roots.empty(); break;
    case ExistenceVerdict::NoRoot: r.consistent = r.roots.empty(); break;
    case ExistenceVerdict::NotCovered: r.consistent = true; break;
  }
  return r;
}

// ---- integrality ----------------------------------------------------------

namespace {

// c_1(L_{j,a}) = 1/2 c prod_{k != j}(eta - beta_k) (C_a (eta - beta_j) + 1) [omega_a / 2pi]
// on the momentum interval [beta_0, beta_1] = [-1, 1] with c = 1.  The twist
// C_a is fixed by making L_{0,a} trivial unless eta_a = beta_0.
template <class T>
std::pair<T, T> chern_pair(const T& eta, const T& w) {
  const T one(1), b0 = -one, b1 = one, half = one / (one + one);
  T C = eta == b0 ? T(0) : -one / (eta - b0);
  T c0 = half * (eta - b1) * (C * (eta - b0) + one) * w;
  T c1 = half * (eta - b0) * (C * (eta - b1) + one) * w;
  return {c0, c1};
}

bool near_integer(double v, double tol) { return std::abs(v - std::round(v)) <= tol; }

}  // namespace

IntegrityReport check_integrality(const LineBundleProblem& p, const std::vector<double>& x, double tol) {
  p.validate();
  IntegrityReport rep;
  rep.passed = true;
  for (std::size_t a = 0; a < p.N(); ++a) {
    FactorIntegrality f;
    Rational w;  // [omega_a / 2pi] in units of the primitive class
    if (!p.degrees.empty()) {
      f.degree = p.degrees[a];
      w = Rational(p.degrees[a]);
      f.einstein_matches = p.s[a] * w == Rational(p.d[a] + 1);
    } else if (!p.s[a].is_zero()) {
      w = Rational(p.d[a] + 1) / p.s[a];
    } else {
      w = Rational(1);
    }
    auto [c0, c1] = chern_pair<double>(-1 / x[a], w.to_double());
    f.chern[0] = c0;
    f.chern[1] = c1;
    f.chern_integral = near_integer(c0, tol) && near_integer(c1, tol);
    if (std::abs(std::abs(x[a]) - 1) <= tol) f.blowdown_normalized = std::abs((x[a] > 0 ? c0 : c1) + 1) <= tol;
    rep.passed = rep.passed && f.einstein_matches && f.chern_integral && f.blowdown_normalized.value_or(true);
    rep.factors.push_back(f);
  }
  return rep;
}

IntegrityReport check_integrality(const LineBundleProblem& p, const RationalVector& x) {
  p.validate();
  IntegrityReport rep;
  rep.exact = true;
  rep.passed = true;
  for (std::size_t a = 0; a < p.N(); ++a) {
    FactorIntegrality f;
    Rational w;
    if (!p.degrees.empty()) {
      f.degree = p.degrees[a];
      w = Rational(p.degrees[a]);
      f.einstein_matches = p.s[a] * w == Rational(p.d[a] + 1);
    } else if (!p.s[a].is_zero()) {
      w = Rational(p.d[a] + 1) / p.s[a];
    } else {
      w = Rational(1);
    }
    auto [c0, c1] = chern_pair<Rational>(Rational(-1) / x[a], w);
    f.chern[0] = c0.to_double();
    f.chern[1] = c1.to_double();
    f.chern_integral = c0.is_integer() && c1.is_integer();
    if (exact::abs(x[a]) == Rational(1)) f.blowdown_normalized = (x[a].sign() > 0 ? c0 : c1) == Rational(-1);
    rep.passed = rep.passed && f.einstein_matches && f.chern_integral && f.blowdown_normalized.value_or(true);
    rep.factors.push_back(f);
  }
  return rep;
}

// ---- blow-down ------------------------------------------------------------

BlowdownReport solve_blowdown(const BlowdownProblem& p) {
  BlowdownReport rep;
  const Rational one(1), two(2);
  // F' = p_c (B (z^2 - 1) - 2z + lambda z (z - 1)) with (F'/p_c)(-1) = 2 + 2 lambda = K.
  const Rational lambda = (p.K - two) / two;
  rep.consistent = p.K == two * p.s1;
  if (!rep.consistent)
    rep.diagnostic = "the pinned factor forces K = 2 s_1 = " + (two * p.s1).str() + ", got K = " + p.K.str();

  // f(x) = int (t + 1)(x t + 1) H dt with
  // H = x (x s - 1)(1 - t^2) + t (1 - x^2) + (lambda / 2)(1 + x)(t - 1)(x t + 1).
  const auto x = MultiPolynomial::variable(2, 0), t = MultiPolynomial::variable(2, 1);
  const auto c1 = MultiPolynomial::constant(2, one);
  MultiPolynomial H = x * (p.s2 * x - c1) * (c1 - t * t) + t * (c1 - x * x) +
                      (lambda / two) * ((c1 + x) * (t - c1) * (x * t + c1));
  MultiPolynomial integrand = (t + c1) * (x * t + c1) * H;
  std::vector<Rational> fc;
  for (const auto& [e, c] : integrand.terms()) {
    if (e[1] % 2) continue;
    if (fc.size() <= static_cast<std::size_t>(e[0])) fc.resize(e[0] + 1);
    fc[e[0]] += c * Rational(BigInt(2), BigInt(e[1] + 1));
  }
  rep.f = Polynomial(fc);
  rep.f_at_minus1 = rep.f(-one);
  rep.f_at_0 = rep.f(Rational(0));
  rep.df_at_0 = rep.f.derivative()(Rational(0));
  rep.f_at_minus_half = rep.f(Rational(-1, 2));
  rep.not_einstein = !rep.f_at_minus_half.is_zero();
  if (!rep.f.is_zero()) rep.roots = exact::real_roots(rep.f, exact::RealInterval::open(-one, Rational(0)));

  for (const auto& root : rep.roots) {
    const double x2 = root.value;
    WbfSolution sol;
    sol.x = {1.0, x2};
    RealPolynomial pc = RealPolynomial::root_factor(-1.0) * RealPolynomial::root_factor(-1 / x2);
    // B from the interior Einstein constant of factor 2:
    // B (1 - x^2) = 2 s x^2 - 2 x - lambda (1 + x)
    const double s2 = p.s2.to_double(), lam = lambda.to_double();
    sol.B = (2 * s2 * x2 * x2 - 2 * x2 - lam * (1 + x2)) / (1 - x2 * x2);
    RealPolynomial inner({-sol.B, -2 - lam, sol.B + lam});
    auto anti = (pc * inner).antiderivative();
    sol.F = anti - RealPolynomial::constant(anti(-1.0));
    sol.h = {0.0, eval(rep.f, x2)};
    sol.ca_residuals = {rep.consistent ? 0.0 : (p.K - two * p.s1).to_double(), 0.0};
    // p_c(-1) = 0, so the condition at -1 is on F'/p_c = inner.
    sol.boundary_residual = std::max({std::abs(sol.F(1.0)), std::abs(sol.F(-1.0)),
                                      std::abs(sol.F.derivative()(1.0) + 2 * pc(1.0)),
                                      std::abs(inner(-1.0) - p.K.to_double())});
    sol.sign_ok = sign_matches(sol.F, pc);
    sol.is_einstein = std::abs(sol.B) < 1e-10;
    sol.passed = rep.consistent && sol.boundary_residual <= 1e-10 && sol.sign_ok;
    rep.solutions.push_back(std::move(sol));
  }
  rep.passed = rep.consistent && rep.f_at_minus1.sign() < 0 && rep.f_at_0.is_zero() && rep.df_at_0.sign() < 0 &&
               !rep.roots.empty() && rep.not_einstein;
  for (const auto& s : rep.solutions) rep.passed = rep.passed && s.passed;
  return rep;
}

// ---- regimes --------------------------------------------------------------

std::vector<LineBundleProblem> two_factor_regime_instances(int max_dim, int max_degree) {
  std::vector<LineBundleProblem> out;
  auto make = [](int d1, int d2, int k1, int k2) {
    LineBundleProblem p;
    p.name = "cp" + std::to_string(d1) + "xcp" + std::to_string(d2) + " O(" + std::to_string(k1) + "," +
             std::to_string(k2) + ")";
    p.d = {d1, d2};
    p.s = {Rational(BigInt(d1 + 1), BigInt(k1)), Rational(BigInt(d2 + 1), BigInt(k2))};
    p.degrees = {BigInt(k1), BigInt(k2)};
    return p;
  };
  for (int d1 = 1; d1 <= max_dim; ++d1)
    for (int d2 = 1; d2 <= max_dim; ++d2) {
      for (int k1 = d1 + 2; k1 <= max_degree; ++k1)
        for (int k2 = d2 + 2; k2 <= max_degree; ++k2) out.push_back(make(d1, d2, k1, k2));
      for (int k1 = 1; k1 <= d1; ++k1)
        for (int k2 = 1; k2 <= d2; ++k2) out.push_back(make(d1, d2, k1, -k2));
    }
  return out;
}

}  // namespace hamform::wbf
