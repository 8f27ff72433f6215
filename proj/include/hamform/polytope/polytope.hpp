// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include "hamform/exactmath/lattice.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamform::polytope {

using exact::BigInt;
using exact::IntegerLattice;
using exact::Rational;
using exact::RationalVector;

class PolytopeError : public std::runtime_error {
public:
  enum class Kind { Unbounded, EmptyInterior, TooManyFacets, NotDelzant };
  PolytopeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// Polytope { x : <u_j, x> + lambda_j >= 0 } with normals u_j in a lattice.
/// The lengths of the u_j carry the labelling.
class RationalDelzantPolytope {
public:
  /// Lattice defaults to the one generated by the normals.
  RationalDelzantPolytope(std::vector<RationalVector> normals, RationalVector offsets,
                          std::optional<IntegerLattice> lattice = std::nullopt);

  std::size_t dim() const { return normals_.front().size(); }
  std::size_t facets() const { return normals_.size(); }
  const std::vector<RationalVector>& normals() const { return normals_; }
  const RationalVector& offsets() const { return offsets_; }
  const IntegerLattice& lattice() const { return lattice_; }

  /// L_j(x) = <u_j, x> + lambda_j.
  Rational affine(std::size_t j, const RationalVector& x) const;
  double affine(std::size_t j, std::span<const double> x) const;
  bool contains(const RationalVector& x) const;

  /// Positive integer with u_j = label * (primitive lattice vector).
  std::vector<BigInt> labels() const;

private:
  std::vector<RationalVector> normals_;
  RationalVector offsets_;
  IntegerLattice lattice_;
};

struct Vertex {
  RationalVector point;
  std::vector<std::size_t> active;  ///< normals with L_j = 0, ascending
};

struct Violation {
  std::string kind;  ///< "degenerate-vertex", "dependent-normals", "redundant-facet", "non-unimodular"
  std::string detail;
  std::vector<std::size_t> normals;
};

struct PolytopeReport {
  bool is_rational_delzant = false;
  bool is_integral_delzant = false;
  std::vector<Vertex> vertices;
  std::vector<BigInt> labels;
  std::vector<Violation> violations;
};

inline constexpr std::size_t kMaxFacets = 12;

/// Enumerates vertices by brute force over m-subsets of normals and checks the
/// rational and integral Delzant conditions.  Throws PolytopeError for more
/// than 12 facets, an unbounded region or an empty interior.
PolytopeReport verify_delzant(const RationalDelzantPolytope& P);

struct Face {
  std::vector<std::size_t> normals;   ///< defining normals (empty for the interior)
  std::vector<std::size_t> vertices;  ///< indices into PolytopeReport::vertices
  int dim = 0;
};

/// All faces of a rational Delzant polytope, including the open interior.
std::vector<Face> faces(const RationalDelzantPolytope& P, const PolytopeReport& report);

/// Vertex average; an interior point whenever the interior is non-empty.
RationalVector vertex_centroid(const PolytopeReport& report);

/// Simplex { sigma : p_nc(beta_j) >= 0 } in the sigma coordinates of an
/// orthotoric chart, with normals u_j = (2 n_j / c) v_j.
RationalDelzantPolytope orthotoric_simplex(const RationalVector& betas, std::span<const BigInt> labels,
                                           const Rational& c);

/// The unscaled v_j and kappa_j with <v_j, sigma> + kappa_j = p_nc(beta_j) / prod_{k != j}(beta_j - beta_k).
void simplex_normal(const RationalVector& betas, std::size_t j, RationalVector& v, Rational& kappa);

struct DualPairingReport {
  std::vector<RationalVector> generators;  ///< X_j in t
  /// value[p][q][j] = theta_{p,q}(X_j) for p < q
  std::vector<std::vector<std::vector<Rational>>> value;
  bool passed = false;
};

/// Checks theta_{p,q}(X_j) = delta_{jq} - delta_{jp} exactly.
DualPairingReport dual_pairing_check(const RationalVector& betas, const Rational& c);

/// Quadrilateral momentum image of the Kahler-Einstein metric on the
/// orthotoric surface with parameters p > q > 0.  Normals are ordered
/// (alpha_1, beta_1, alpha_2, beta_2); lattice Z^2.
RationalDelzantPolytope ke_surface_polytope(const Rational& p, const Rational& q);

}  // namespace hamform::polytope
