// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include <doctest.h>

#include "hamform/polytope/boundary.hpp"

#include <random>

using namespace hamform::polytope;
using hamform::exact::RationalMatrix;

namespace {

Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }

RationalDelzantPolytope cp2() {
  return RationalDelzantPolytope({{q(1), q(0)}, {q(0), q(1)}, {q(-1), q(-1)}}, {q(0), q(0), q(1)});
}

RationalDelzantPolytope unit_square() {
  return RationalDelzantPolytope({{q(1), q(0)}, {q(-1), q(0)}, {q(0), q(1)}, {q(0), q(-1)}},
                                 {q(0), q(1), q(0), q(1)});
}

// Hirzebruch trapezoid: x >= 0, y >= 0, y <= b, x + k y <= a.
RationalDelzantPolytope hirzebruch(long k, const Rational& a, const Rational& b) {
  return RationalDelzantPolytope({{q(1), q(0)}, {q(0), q(1)}, {q(-1), q(-k)}, {q(0), q(-1)}}, {q(0), q(0), a, b},
                                 hamform::exact::IntegerLattice::standard(2));
}

std::vector<RationalVector> vertex_points(const PolytopeReport& r) {
  std::vector<RationalVector> out;
  for (const auto& v : r.vertices) out.push_back(v.point);
  return out;
}

}  // namespace

TEST_CASE("delzant check on standard polytopes") {
  auto r = verify_delzant(cp2());
  CHECK(r.is_rational_delzant);
  CHECK(r.is_integral_delzant);
  CHECK(r.vertices.size() == 3);
  CHECK(r.violations.empty());

  auto s = verify_delzant(unit_square());
  CHECK(s.is_integral_delzant);
  CHECK(vertex_points(s) == std::vector<RationalVector>{{q(0), q(0)}, {q(0), q(1)}, {q(1), q(0)}, {q(1), q(1)}});
  CHECK(faces(unit_square(), s).size() == 9);
}

TEST_CASE("delzant violations are reported") {
  // Weighted projective triangle: rational Delzant, not integral.
  RationalDelzantPolytope w({{q(1), q(0)}, {q(0), q(1)}, {q(-1), q(-2)}}, {q(0), q(0), q(2)},
                            hamform::exact::IntegerLattice::standard(2));
  auto r = verify_delzant(w);
  CHECK(r.is_rational_delzant);
  CHECK_FALSE(r.is_integral_delzant);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == "non-unimodular");

  // Square pyramid: four facets meet at the apex.
  RationalDelzantPolytope pyr({{q(0), q(0), q(1)},
                               {q(-1), q(0), q(-1)},
                               {q(1), q(0), q(-1)},
                               {q(0), q(-1), q(-1)},
                               {q(0), q(1), q(-1)}},
                              {q(0), q(1), q(1), q(1), q(1)});
  auto p = verify_delzant(pyr);
  CHECK_FALSE(p.is_rational_delzant);
  CHECK(p.violations.front().kind == "degenerate-vertex");

  // A redundant inequality.
  RationalDelzantPolytope red({{q(1), q(0)}, {q(0), q(1)}, {q(-1), q(-1)}, {q(-1), q(0)}}, {q(0), q(0), q(1), q(5)});
  auto rr = verify_delzant(red);
  CHECK_FALSE(rr.is_rational_delzant);
  CHECK(rr.violations.front().kind == "redundant-facet");
}

TEST_CASE("delzant check input errors") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const PolytopeError& e) {
      return e.kind();
    }
    FAIL("no PolytopeError");
    return PolytopeError::Kind::NotDelzant;
  };
  CHECK(kind_of([] {
          verify_delzant(RationalDelzantPolytope({{q(1), q(0)}, {q(0), q(1)}}, {q(0), q(0)},
                                                 hamform::exact::IntegerLattice::standard(2)));
        }) == PolytopeError::Kind::Unbounded);
  CHECK(kind_of([] {
          verify_delzant(RationalDelzantPolytope({{q(1), q(0)}, {q(-1), q(0)}, {q(1), q(1)}}, {q(0), q(0), q(0)}));
        }) == PolytopeError::Kind::Unbounded);
  CHECK(kind_of([] {
          verify_delzant(RationalDelzantPolytope({{q(1), q(0)}, {q(-1), q(0)}, {q(0), q(1)}, {q(0), q(-1)}},
                                                 {q(0), q(0), q(0), q(1)}));
        }) == PolytopeError::Kind::EmptyInterior);
  std::vector<RationalVector> many;
  RationalVector offs;
  for (int i = 0; i < 13; ++i) {
    many.push_back({q(i % 2 ? 1 : -1), q(i)});
    offs.push_back(q(50));
  }
  CHECK(kind_of([&] { verify_delzant(RationalDelzantPolytope(many, offs)); }) == PolytopeError::Kind::TooManyFacets);
  CHECK_THROWS_AS(RationalDelzantPolytope({{q(1, 2), q(0)}, {q(0), q(1)}, {q(-1), q(-1)}}, {q(0), q(0), q(1)},
                                          hamform::exact::IntegerLattice::standard(2)),
                  std::invalid_argument);
}

TEST_CASE("orthotoric simplex normals") {
  std::vector<BigInt> ones{1, 1, 1};
  auto P = orthotoric_simplex({q(0), q(1), q(2)}, ones, q(2));
  CHECK(P.normals() == std::vector<RationalVector>{{q(0), q(1, 2)}, {q(1), q(-1)}, {q(-1), q(1, 2)}});
  // Each L_j equals p_nc(beta_j) / prod(beta_j - beta_k) scaled by 2 n_j / c;
  // at sigma = (0, 0) p_nc(t) = t^2, giving beta_j^2 / prod.
  CHECK(P.offsets() == RationalVector{q(0), q(-1), q(2)});
  auto r = verify_delzant(P);
  CHECK(r.is_integral_delzant);

  // Labels rescale normals and keep the region.
  std::vector<BigInt> w{2, 3, 6};
  auto Pw = orthotoric_simplex({q(0), q(1), q(2)}, w, q(1));
  // Relative to the lattice spanned by the unlabelled generators the labels reappear.
  auto gens = dual_pairing_check({q(0), q(1), q(2)}, q(1)).generators;
  RationalDelzantPolytope relabelled(Pw.normals(), Pw.offsets(), hamform::exact::IntegerLattice::generated_by(gens));
  CHECK(relabelled.labels() == std::vector<BigInt>{2, 3, 6});
  CHECK(vertex_points(verify_delzant(Pw)) == vertex_points(r));
  CHECK_THROWS_AS(orthotoric_simplex({q(0), q(0), q(2)}, ones, q(1)), std::invalid_argument);
  std::vector<BigInt> shared{2, 4, 6};
  CHECK_THROWS_AS(orthotoric_simplex({q(0), q(1), q(2)}, shared, q(1)), std::invalid_argument);
}

TEST_CASE("dual pairing of the simplex generators") {
  auto r = dual_pairing_check({q(0), q(1), q(2)}, q(2));
  CHECK(r.passed);
  CHECK(r.generators[1] == RationalVector{q(1), q(-1)});

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 7), msize(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t m = msize(rng);
    std::vector<Rational> betas;
    while (betas.size() < m + 1) {
      Rational b = q(num(rng), den(rng));
      if (std::find(betas.begin(), betas.end(), b) == betas.end()) betas.push_back(b);
    }
    std::sort(betas.begin(), betas.end());
    Rational c = q(1 + trial % 5, den(rng));
    auto rep = dual_pairing_check(betas, c);
    CHECK(rep.passed);
    // The generators sum to zero.
    RationalVector total(m);
    for (const auto& X : rep.generators)
      for (std::size_t i = 0; i < m; ++i) total[i] += X[i];
    CHECK(total == RationalVector(m));
  }
}

TEST_CASE("ke surface quadrilateral") {
  auto P = ke_surface_polytope(q(2), q(1));
  auto r = verify_delzant(P);
  CHECK(r.is_rational_delzant);
  CHECK_FALSE(r.is_integral_delzant);
  CHECK(r.labels == std::vector<BigInt>{4, 5, 5, 4});
  auto pts = vertex_points(r);
  std::vector<RationalVector> expect{{q(-1), q(-2)}, {q(0), q(-4)}, {q(0), q(-1)}, {q(1), q(-2)}};
  CHECK(pts == expect);
  CHECK_THROWS_AS(ke_surface_polytope(q(1), q(2)), std::invalid_argument);
}

TEST_CASE("canonical hessian at the barycentre of the simplex") {
  auto H = canonical_hessian(cp2());
  RationalVector bary{q(1, 3), q(1, 3)};
  RationalMatrix G = H.G_exact(bary);
  CHECK(G == RationalMatrix::from_rows({{q(3), q(3, 2)}, {q(3, 2), q(3)}}));
  CHECK(G * H.H_exact(bary) == RationalMatrix::identity(2));
}

TEST_CASE("canonical hessian: closed-form inverse agrees with G^{-1}") {
  std::mt19937_64 rng(17);
  std::vector<RationalDelzantPolytope> polys{cp2(), unit_square(), ke_surface_polytope(q(2), q(1)),
                                             hirzebruch(2, q(5), q(3, 2))};
  std::vector<BigInt> ones{1, 1, 1, 1};
  polys.push_back(orthotoric_simplex({q(-1), q(0), q(1, 2), q(3)}, ones, q(1)));
  for (const auto& P : polys) {
    auto field = canonical_hessian(P);
    auto rep = verify_delzant(P);
    Face interior;
    for (std::size_t i = 0; i < rep.vertices.size(); ++i) interior.vertices.push_back(i);
    for (const auto& y : face_samples(interior, rep, 10, q(1, 50))) {
      RationalMatrix G = field.G_exact(y), Hx = field.H_exact(y);
      CHECK(G * Hx == RationalMatrix::identity(P.dim()));
      Eigen::VectorXd yf(P.dim());
      for (std::size_t i = 0; i < P.dim(); ++i) yf[i] = y[i].to_double();
      Eigen::MatrixXd Gf = field.G(yf), Hf = field.H(yf);
      double err = (Gf * Hf - Eigen::MatrixXd::Identity(P.dim(), P.dim())).cwiseAbs().maxCoeff();
      CHECK(err <= 1e-10);
      // Independent oracle: numerical inverse of G.
      CHECK((Gf.inverse() - Hf).cwiseAbs().maxCoeff() <= 1e-10 * (1 + Hf.cwiseAbs().maxCoeff()));
    }
  }
}

TEST_CASE("toric boundary conditions of the canonical potential") {
  for (const auto& P : {cp2(), unit_square(), ke_surface_polytope(q(2), q(1)), hirzebruch(1, q(3), q(1))}) {
    auto field = canonical_hessian(P);
    auto exact = check_toric_boundary(field, P);
    CHECK(exact.exact);
    CHECK(exact.passed);
    CHECK(exact.max_vanishing_residual == 0);
    CHECK(exact.max_derivative_residual == 0);
    CHECK(exact.factor_min == 1);
    CHECK(exact.factor_max == 1);

    BoundaryOptions fo;
    fo.prefer_exact = false;
    auto fl = check_toric_boundary(field, P, fo);
    CHECK_FALSE(fl.exact);
    CHECK(fl.passed);
    CHECK(fl.max_derivative_residual <= 1e-8);
  }
}

TEST_CASE("toric boundary check detects a rescaled potential") {
  auto P = cp2();
  auto bad = canonical_hessian(P).scaled(q(11, 10));
  auto r = check_toric_boundary(bad, P);
  CHECK_FALSE(r.passed);
  CHECK(r.max_vanishing_residual == 0);
  CHECK(r.factor_min == doctest::Approx(1.1).epsilon(1e-12));
  CHECK(r.factor_max == doctest::Approx(1.1).epsilon(1e-12));
  for (const auto& f : r.faces) CHECK(f.positive);

  BoundaryOptions fo;
  fo.prefer_exact = false;
  auto rf = check_toric_boundary(bad, P, fo);
  CHECK_FALSE(rf.passed);
  CHECK(std::abs(rf.factor_min - 1.1) <= 1e-6);
}

TEST_CASE("random hirzebruch trapezoids satisfy the boundary conditions") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> kk(0, 3), bb(1, 4), extra(1, 6);
  for (int trial = 0; trial < 12; ++trial) {
    long k = kk(rng);
    Rational b = q(bb(rng), 2), a = Rational(k) * b + q(extra(rng), 3);
    auto P = hirzebruch(k, a, b);
    auto rep = verify_delzant(P);
    CHECK(rep.is_integral_delzant);
    BoundaryOptions o;
    o.samples_per_face = 2;
    CHECK(check_toric_boundary(canonical_hessian(P), P, o).passed);
  }
}
