// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include "hamform/exactmath/matrix.hpp"

#include <optional>
#include <vector>

namespace hamform::exact {

struct HermiteForm {
  IntMatrix H;  ///< column-style Hermite normal form, H = M * U
  IntMatrix U;  ///< unimodular transform
  std::size_t rank = 0;
};

/// Column Hermite normal form: the first `rank` columns of H are in lower
/// echelon form with positive pivots, entries left of a pivot reduced into
/// [0, pivot), remaining columns zero.
HermiteForm hermite_normal_form(const IntMatrix& M);

/// Full-rank lattice in Q^m, stored as the columns of an integer matrix
/// divided by a common positive denominator.
class IntegerLattice {
public:
  /// Z^m.
  static IntegerLattice standard(std::size_t m);
  /// Lattice generated by the given vectors; throws if they do not span Q^m.
  static IntegerLattice generated_by(const std::vector<RationalVector>& generators);
  /// Lattice with the given basis vectors (each a rational vector of length m).
  static IntegerLattice from_basis(const std::vector<RationalVector>& basis);

  std::size_t dim() const { return basis_.rows(); }
  /// Basis vectors (columns of the Hermite form divided by the denominator).
  std::vector<RationalVector> basis() const;
  const IntMatrix& integer_basis() const { return basis_; }
  const BigInt& denominator() const { return den_; }

  /// Integer coordinates of v in the basis, or nullopt when v is not a lattice vector.
  std::optional<std::vector<BigInt>> coordinates(const RationalVector& v) const;
  bool contains(const RationalVector& v) const { return coordinates(v).has_value(); }
  /// Covolume |det basis|.
  Rational covolume() const;

  friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;

private:
  IntMatrix basis_;  // m x m, Hermite normal form
  BigInt den_ = 1;
};

}  // namespace hamform::exact
