// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "hamform/polytope/polytope.hpp"

#include "hamform/exactmath/polynomial.hpp"
#include "subsets.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hamform::polytope {

using exact::RationalMatrix;

RationalDelzantPolytope::RationalDelzantPolytope(std::vector<RationalVector> normals, RationalVector offsets,
                                                 std::optional<IntegerLattice> lattice)
    : normals_(std::move(normals)), offsets_(std::move(offsets)) {
  if (normals_.empty()) throw std::invalid_argument("polytope needs at least one normal");
  if (normals_.size() != offsets_.size()) throw std::invalid_argument("polytope: normals and offsets differ in count");
  const std::size_t m = normals_.front().size();
  if (m == 0) throw std::invalid_argument("polytope: zero-dimensional normals");
  for (const auto& u : normals_) {
    if (u.size() != m) throw std::invalid_argument("polytope: normals of different dimensions");
    if (std::all_of(u.begin(), u.end(), [](const Rational& x) { return x.is_zero(); }))
      throw std::invalid_argument("polytope: zero normal");
  }
  if (lattice) {
    if (lattice->dim() != m) throw std::invalid_argument("polytope: lattice dimension mismatch");
    lattice_ = std::move(*lattice);
  } else {
    try {
      lattice_ = IntegerLattice::generated_by(normals_);
    } catch (const std::invalid_argument&) {
      throw PolytopeError(PolytopeError::Kind::Unbounded, "normals do not span the space; region is unbounded");
    }
  }
  for (std::size_t j = 0; j < normals_.size(); ++j)
    if (!lattice_.contains(normals_[j]))
      throw std::invalid_argument("polytope: normal " + std::to_string(j) + " is not a lattice vector");
}

Rational RationalDelzantPolytope::affine(std::size_t j, const RationalVector& x) const {
  return exact::dot(normals_[j], x) + offsets_[j];
}

double RationalDelzantPolytope::affine(std::size_t j, std::span<const double> x) const {
  double s = offsets_[j].to_double();
  for (std::size_t i = 0; i < x.size(); ++i) s += normals_[j][i].to_double() * x[i];
  return s;
}

bool RationalDelzantPolytope::contains(const RationalVector& x) const {
  for (std::size_t j = 0; j < facets(); ++j)
    if (affine(j, x).sign() < 0) return false;
  return true;
}

std::vector<BigInt> RationalDelzantPolytope::labels() const {
  std::vector<BigInt> out;
  for (const auto& u : normals_) {
    auto c = lattice_.coordinates(u);
    BigInt g = 0;
    for (const auto& x : *c) g = exact::gcd(g, x);
    out.push_back(g);
  }
  return out;
}

namespace {

RationalMatrix rows_of(const std::vector<RationalVector>& vs, std::span<const std::size_t> idx) {
  RationalMatrix A(idx.size(), vs.front().size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) A(i, j) = vs[idx[i]][j];
  return A;
}

std::string list(std::span<const std::size_t> idx) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << "}";
  return os.str();
}

void check_bounded(const RationalDelzantPolytope& P) {
  const auto& U = P.normals();
  const std::size_t m = P.dim();
  std::vector<std::size_t> all(U.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (exact::rank(rows_of(U, all)) < m)
    throw PolytopeError(PolytopeError::Kind::Unbounded, "normals do not span the space; region is unbounded");
  // A recession direction, if any, lies on an extreme ray cut out by m-1 normals.
  bool unbounded = false;
  for_each_subset(U.size(), m - 1, [&](std::span<const std::size_t> T) {
    if (unbounded) return;
    RationalVector d;
    if (T.empty()) {
      d = RationalVector(m);
      d[0] = Rational(1);
    } else {
      auto A = rows_of(U, T);
      auto ns = exact::nullspace(A);
      if (ns.size() != 1) return;
      d = ns.front();
    }
    bool nonneg = true, nonpos = true;
    for (const auto& u : U) {
      int s = exact::dot(u, d).sign();
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    unbounded = nonneg || nonpos;
  });
  if (unbounded) throw PolytopeError(PolytopeError::Kind::Unbounded, "region has a recession direction");
}

}  // namespace

PolytopeReport verify_delzant(const RationalDelzantPolytope& P) {
  if (P.facets() > kMaxFacets)
    throw PolytopeError(PolytopeError::Kind::TooManyFacets,
                        "vertex enumeration is limited to " + std::to_string(kMaxFacets) + " facets, got " +
                            std::to_string(P.facets()));
  check_bounded(P);
  const auto& U = P.normals();
  const std::size_t m = P.dim(), n = P.facets();

  PolytopeReport report;
  for_each_subset(n, m, [&](std::span<const std::size_t> S) {
    auto A = rows_of(U, S);
    RationalVector rhs(m);
    for (std::size_t i = 0; i < m; ++i) rhs[i] = -P.offsets()[S[i]];
    auto x = exact::solve(A, rhs);
    if (!x || !P.contains(*x)) return;
    for (const auto& v : report.vertices)
      if (v.point == *x) return;
    Vertex v{*x, {}};
    for (std::size_t j = 0; j < n; ++j)
      if (P.affine(j, *x).is_zero()) v.active.push_back(j);
    report.vertices.push_back(std::move(v));
  });
  if (report.vertices.empty()) throw PolytopeError(PolytopeError::Kind::EmptyInterior, "polytope is empty");
  std::sort(report.vertices.begin(), report.vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.point < b.point; });
  auto centre = vertex_centroid(report);
  for (std::size_t j = 0; j < n; ++j)
    if (P.affine(j, centre).is_zero())
      throw PolytopeError(PolytopeError::Kind::EmptyInterior,
                          "polytope has empty interior (lies in facet hyperplane " + std::to_string(j) + ")");

  std::vector<bool> used(n, false);
  for (const auto& v : report.vertices) {
    for (auto j : v.active) used[j] = true;
    if (v.active.size() != m) {
      report.violations.push_back({"degenerate-vertex",
                                   "vertex has " + std::to_string(v.active.size()) + " active facets " +
                                       list(v.active) + ", expected " + std::to_string(m),
                                   v.active});
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!used[j]) report.violations.push_back({"redundant-facet", "normal " + std::to_string(j) + " cuts out no facet", {j}});
  report.is_rational_delzant = report.violations.empty();

  report.labels = P.labels();
  if (report.is_rational_delzant) {
    bool integral = true;
    for (const auto& v : report.vertices) {
      exact::IntMatrix C(m, m);
      for (std::size_t i = 0; i < m; ++i) {
        auto c = *P.lattice().coordinates(U[v.active[i]]);
        for (std::size_t k = 0; k < m; ++k) C(i, k) = c[k];
      }
      BigInt det = exact::determinant(C);
      if (det != 1 && det != -1) {
        integral = false;
        report.violations.push_back({"non-unimodular",
                                     "normals " + list(v.active) + " at a vertex span a sublattice of index " +
                                         BigInt(abs(det)).get_str(),
                                     v.active});
      }
    }
    report.is_integral_delzant = integral;
  }
  return report;
}

RationalVector vertex_centroid(const PolytopeReport& report) {
  RationalVector c(report.vertices.front().point.size());
  for (const auto& v : report.vertices)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += v.point[i];
  Rational k(static_cast<long>(report.vertices.size()));
  for (auto& x : c) x /= k;
  return c;
}

std::vector<Face> faces(const RationalDelzantPolytope& P, const PolytopeReport& report) {
  if (!report.is_rational_delzant)
    throw PolytopeError(PolytopeError::Kind::NotDelzant, "face enumeration requires a rational Delzant polytope");
  std::map<std::vector<std::size_t>, Face> by_normals;
  const std::size_t m = P.dim();
  for (const auto& v : report.vertices) {
    for (std::size_t k = 0; k <= m; ++k) {
      for_each_subset(m, k, [&](std::span<const std::size_t> pick) {
        std::vector<std::size_t> S;
        for (auto i : pick) S.push_back(v.active[i]);
        if (by_normals.count(S)) return;
        Face f;
        f.normals = S;
        f.dim = static_cast<int>(m - k);
        for (std::size_t i = 0; i < report.vertices.size(); ++i) {
          const auto& act = report.vertices[i].active;
          if (std::includes(act.begin(), act.end(), S.begin(), S.end())) f.vertices.push_back(i);
        }
        by_normals.emplace(S, std::move(f));
      });
    }
  }
  std::vector<Face> out;
  for (auto& [key, f] : by_normals) out.push_back(std::move(f));
  std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) { return a.dim > b.dim; });
  return out;
}

void simplex_normal(const RationalVector& betas, std::size_t j, RationalVector& v, Rational& kappa) {
  const std::size_t m = betas.size() - 1;
  Rational denom(1);
  for (std::size_t k = 0; k <= m; ++k)
    if (k != j) denom *= betas[j] - betas[k];
  v.assign(m, Rational());
  for (std::size_t r = 1; r <= m; ++r) {
    Rational term = exact::pow(betas[j], static_cast<int>(m - r)) / denom;
    v[r - 1] = (r % 2) ? -term : term;
  }
  kappa = exact::pow(betas[j], static_cast<int>(m)) / denom;
}

namespace {

void check_betas(const RationalVector& betas) {
  if (betas.size() < 2) throw std::invalid_argument("need at least two roots beta_0 < beta_1");
  for (std::size_t j = 1; j < betas.size(); ++j)
    if (!(betas[j - 1] < betas[j])) throw std::invalid_argument("roots beta_j must be strictly increasing");
}

}  // namespace

RationalDelzantPolytope orthotoric_simplex(const RationalVector& betas, std::span<const BigInt> labels,
                                           const Rational& c) {
  check_betas(betas);
  if (labels.size() != betas.size()) throw std::invalid_argument("orthotoric_simplex: one label per root");
  if (c.sign() <= 0) throw std::invalid_argument("orthotoric_simplex: c must be positive");
  BigInt g = 0;
  for (const auto& n : labels) {
    if (n <= 0) throw std::invalid_argument("orthotoric_simplex: labels must be positive integers");
    g = exact::gcd(g, n);
  }
  if (g != 1) throw std::invalid_argument("orthotoric_simplex: labels must be coprime");
  std::vector<RationalVector> normals;
  RationalVector offsets;
  for (std::size_t j = 0; j < betas.size(); ++j) {
    RationalVector v;
    Rational kappa;
    simplex_normal(betas, j, v, kappa);
    Rational s = Rational(2) * Rational(labels[j]) / c;
    for (auto& x : v) x *= s;
    normals.push_back(std::move(v));
    offsets.push_back(s * kappa);
  }
  return RationalDelzantPolytope(std::move(normals), std::move(offsets));
}

DualPairingReport dual_pairing_check(const RationalVector& betas, const Rational& c) {
  check_betas(betas);
  if (c.is_zero()) throw std::invalid_argument("dual_pairing_check: c must be nonzero");
  const std::size_t m = betas.size() - 1;
  DualPairingReport rep;
  for (std::size_t j = 0; j <= m; ++j) {
    RationalVector v;
    Rational kappa;
    simplex_normal(betas, j, v, kappa);
    for (auto& x : v) x *= Rational(2) / c;
    rep.generators.push_back(std::move(v));
  }
  std::vector<std::vector<Rational>> sig_hat;
  for (std::size_t j = 0; j <= m; ++j) sig_hat.push_back(exact::elem_sym_without<Rational>(betas, j));

  rep.passed = true;
  rep.value.assign(m + 1, std::vector<std::vector<Rational>>(m + 1));
  for (std::size_t p = 0; p <= m; ++p)
    for (std::size_t q = p + 1; q <= m; ++q) {
      for (std::size_t j = 0; j <= m; ++j) {
        Rational val;
        for (std::size_t r = 1; r <= m; ++r)
          val += c / Rational(2) * (sig_hat[q][r] - sig_hat[p][r]) * rep.generators[j][r - 1];
        Rational expect = Rational(j == q ? 1 : 0) - Rational(j == p ? 1 : 0);
        if (val != expect) rep.passed = false;
        rep.value[p][q].push_back(std::move(val));
      }
    }
  return rep;
}

RationalDelzantPolytope ke_surface_polytope(const Rational& p, const Rational& q) {
  if (!(q.sign() > 0 && p > q)) throw std::invalid_argument("ke_surface_polytope: need p > q > 0");
  Rational a = Rational(2) * q + p, b = Rational(2) * p + q;
  std::vector<RationalVector> normals{{a * p, a}, {-b * q, -b}, {b * q, -b}, {-a * p, a}};
  RationalVector offsets{a * p * p, -b * q * q, -b * q * q, a * p * p};
  return RationalDelzantPolytope(std::move(normals), std::move(offsets), IntegerLattice::standard(2));
}

}  // namespace hamform::polytope
