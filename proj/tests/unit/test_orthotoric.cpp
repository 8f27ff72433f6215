// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include <doctest.h>

#include "hamform/orthotoric/profile.hpp"
#include "hamform/polytope/boundary.hpp"

#include <random>

using namespace hamform::orthotoric;
using hamform::polytope::BoundaryOptions;
using hamform::polytope::check_toric_boundary;

namespace {

Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }

RationalVector random_betas(std::mt19937_64& rng, std::size_t count) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 4);
  RationalVector b;
  while (b.size() < count) {
    Rational x = q(num(rng), den(rng));
    if (std::find(b.begin(), b.end(), x) == b.end()) b.push_back(x);
  }
  std::sort(b.begin(), b.end());
  return b;
}

// Interior xi points: xi_j uniformly inside [alpha_j, beta_j] away from the ends.
std::vector<double> random_xi(std::mt19937_64& rng, const ThetaProfile& p, double margin = 0.05) {
  std::uniform_real_distribution<double> u(margin, 1 - margin);
  std::vector<double> xi;
  for (const auto& [a, b] : p.intervals) {
    double lo = a.to_double(), hi = b.to_double();
    xi.push_back(lo + (hi - lo) * u(rng));
  }
  return xi;
}

}  // namespace

TEST_CASE("fubini-study profile satisfies the compactification conditions") {
  auto fs = fubini_study_profile({q(0), q(1), q(2)}, q(1));
  CHECK(fs.profile.single_theta);
  CHECK(fs.profile.theta.front() == Polynomial({q(0), q(-2), q(3), q(-1)}));
  auto rep = check_orthocompact(fs.profile, fs.labels);
  CHECK(rep.passed);
  CHECK(rep.signs_consistent);
  for (const auto& e : rep.endpoints) CHECK(e.unsigned_product == q(2));

  std::vector<BigInt> ones{1, 1, 1};
  CHECK(satisfies_cp_bound(fs.profile.theta.front(), {q(0), q(1), q(2)}, q(1), ones));

  auto P = orthotoric_polytope(fs.profile, fs.labels);
  auto S = hamform::polytope::orthotoric_simplex({q(0), q(1), q(2)}, ones, q(1));
  CHECK(P.normals() == S.normals());
  CHECK(P.offsets() == S.offsets());
}

TEST_CASE("perturbed profiles fail the compactification check") {
  auto fs = fubini_study_profile({q(0), q(1), q(2)}, q(1));
  auto bad = fs.profile;
  bad.theta = std::vector<Polynomial>(2, q(11, 10) * fs.profile.theta.front());
  auto rep = check_orthocompact(bad, fs.labels);
  CHECK_FALSE(rep.passed);
  CHECK(rep.endpoints.front().unsigned_product == q(11, 5));

  auto shifted = fs.profile;
  shifted.theta = std::vector<Polynomial>(2, fs.profile.theta.front() + Polynomial::constant(q(1, 100)));
  CHECK_FALSE(check_orthocompact(shifted, fs.labels).passed);

  auto flipped = fs.profile;
  flipped.theta = std::vector<Polynomial>(2, q(-1) * fs.profile.theta.front());
  auto fr = check_orthocompact(flipped, fs.labels);
  CHECK_FALSE(fr.passed);
  CHECK_FALSE(fr.interval_positive[0]);
}

TEST_CASE("bochner-flat profile for weights (3,2,1)") {
  WeightedProjectiveTag tag({3, 2, 1});
  CHECK(tag.labels() == std::vector<BigInt>{2, 3, 6});
  auto bf = bochner_flat_profile(tag, q(1), q(1));
  CHECK(bf.profile.intervals.front().first == q(1, 2));
  CHECK(bf.profile.intervals.back().second == q(5, 6));
  auto rep = check_orthocompact(bf.profile, bf.labels);
  CHECK(rep.passed);
  // Label magnitudes are the weights times the common factor 2 / (c |prod|).
  CHECK_THROWS_AS(WeightedProjectiveTag({2, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedProjectiveTag({4, 2}), std::invalid_argument);
}

TEST_CASE("kahler-einstein surface profiles") {
  for (auto [p, qq] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
    auto ke = ke_surface_profiles(q(p), q(qq));
    auto rep = check_orthocompact(ke.built.profile, ke.built.labels);
    CHECK(rep.passed);
    CHECK(rep.signs_consistent);
    auto diff = ke.P1 - ke.P2;
    CHECK(diff.degree() == 0);
    CHECK(diff.coefficient(0) == q(-2 * p * qq * (p + qq)));
    auto P = orthotoric_polytope(ke.built.profile, ke.built.labels, hamform::exact::IntegerLattice::standard(2));
    auto Q = hamform::polytope::ke_surface_polytope(q(p), q(qq));
    CHECK(P.normals() == Q.normals());
    CHECK(P.offsets() == Q.offsets());
  }
  CHECK(ke_surface_profiles(q(2), q(1)).C == q(10));
}

TEST_CASE("orthotoric H of the simplex profile is the canonical inverse Hessian") {
  std::mt19937_64 rng(41);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (int trial = 0; trial < 3; ++trial) {
      auto betas = random_betas(rng, m + 1);
      Rational c = q(1 + trial, 2);
      auto fs = fubini_study_profile(betas, c);
      std::vector<BigInt> ones(m + 1, BigInt(1));
      auto P = hamform::polytope::orthotoric_simplex(betas, ones, c);
      auto field = hamform::polytope::canonical_hessian(P);
      for (int k = 0; k < 25; ++k) {
        auto xi = random_xi(rng, fs.profile);
        auto sig = roots_to_sigma(xi);
        Eigen::VectorXd s = Eigen::Map<Eigen::VectorXd>(sig.data(), m);
        Eigen::MatrixXd H0 = field.H(s), H = orthotoric_H(fs.profile, xi);
        CHECK((H0 - H).cwiseAbs().maxCoeff() <= 1e-10 * (1 + H0.cwiseAbs().maxCoeff()));
      }
    }
  }
}

TEST_CASE("orthotoric H input domain") {
  auto ke = ke_surface_profiles(q(2), q(1));
  std::vector<double> edge{-2.0 + 1e-12, 1.5};
  CHECK_THROWS_AS(orthotoric_H(ke.built.profile, edge), std::domain_error);
  std::vector<double> inside{-1.5, 1.5};
  auto H = orthotoric_H(ke.built.profile, inside);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  CHECK(es.eigenvalues().minCoeff() > 0);
}

TEST_CASE("sigma to roots") {
  auto ke = ke_surface_profiles(q(2), q(1));
  std::vector<double> xi{-1.25, 1.75};
  auto s = roots_to_sigma(xi);
  auto back = sigma_to_roots(s, ke.built.profile);
  CHECK(back[0] == doctest::Approx(-1.25).epsilon(1e-14));
  CHECK(back[1] == doctest::Approx(1.75).epsilon(1e-14));
  // Swapped box membership is rejected.
  std::vector<double> bad{1.5, 1.75};
  CHECK_THROWS_AS(sigma_to_roots(roots_to_sigma(bad), ke.built.profile), std::domain_error);
  // Complex roots.
  std::vector<double> cplx{0.0, 1.0};
  CHECK_THROWS_AS(sigma_to_roots(cplx, ke.built.profile), std::domain_error);
  // Shared endpoint of a simplex profile: double root accepted.
  auto fs = fubini_study_profile({q(0), q(1), q(2)}, q(1));
  std::vector<double> twice{1.0, 1.0};
  auto r = sigma_to_roots(roots_to_sigma(twice), fs.profile);
  CHECK(r[0] == 1.0);
  CHECK(r[1] == 1.0);
}

TEST_CASE("orthotoric fields satisfy the toric boundary conditions") {
  auto fs = fubini_study_profile({q(0), q(1), q(2)}, q(1));
  auto Pfs = orthotoric_polytope(fs.profile, fs.labels);
  auto ffield = orthotoric_hessian_field(fs.profile);
  auto er = check_toric_boundary(ffield, Pfs);
  CHECK(er.exact);
  CHECK(er.passed);
  CHECK(er.max_derivative_residual == 0);

  auto ke = ke_surface_profiles(q(2), q(1));
  auto P = orthotoric_polytope(ke.built.profile, ke.built.labels, hamform::exact::IntegerLattice::standard(2));
  auto field = orthotoric_hessian_field(ke.built.profile);
  CHECK_FALSE(field.has_exact());
  BoundaryOptions o;
  o.tol = 1e-6;
  auto r = check_toric_boundary(field, P, o);
  CHECK(r.passed);
  CHECK(std::abs(r.factor_min - 1) < 1e-6);
  CHECK(std::abs(r.factor_max - 1) < 1e-6);

  auto bad = check_toric_boundary(field.scaled(q(11, 10)), P, o);
  CHECK_FALSE(bad.passed);
  CHECK(std::abs(bad.factor_min - 1.1) < 1e-6);
}
