// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "hamform/exactmath/lattice.hpp"

#include <stdexcept>

namespace hamform::exact {

namespace {

// Column operation on H and U: (col a, col b) <- (s*a + t*b, u*a + v*b).
void combine_cols(IntMatrix& A, std::size_t a, std::size_t b, const BigInt& s, const BigInt& t, const BigInt& u,
                  const BigInt& v) {
  for (std::size_t i = 0; i < A.rows(); ++i) {
    BigInt x = A(i, a), y = A(i, b);
    A(i, a) = s * x + t * y;
    A(i, b) = u * x + v * y;
  }
}

void axpy_col(IntMatrix& A, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t i = 0; i < A.rows(); ++i) A(i, dst) -= q * A(i, src);
}

void negate_col(IntMatrix& A, std::size_t c) {
  for (std::size_t i = 0; i < A.rows(); ++i) A(i, c) = -A(i, c);
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& M) {
  HermiteForm out{M, IntMatrix::identity(M.cols()), 0};
  IntMatrix& H = out.H;
  IntMatrix& U = out.U;
  std::size_t col = 0;
  for (std::size_t r = 0; r < H.rows() && col < H.cols(); ++r) {
    for (std::size_t j = col + 1; j < H.cols(); ++j) {
      if (H(r, j) == 0) continue;
      BigInt a = H(r, col), b = H(r, j), s, t;
      BigInt g = extended_gcd(a, b, s, t);
      BigInt u = -b / g, v = a / g;
      combine_cols(H, col, j, s, t, u, v);
      combine_cols(U, col, j, s, t, u, v);
    }
    if (H(r, col) == 0) continue;
    if (H(r, col) < 0) {
      negate_col(H, col);
      negate_col(U, col);
    }
    for (std::size_t k = 0; k < col; ++k) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), H(r, k).get_mpz_t(), H(r, col).get_mpz_t());
      if (q == 0) continue;
      axpy_col(H, k, col, q);
      axpy_col(U, k, col, q);
    }
    ++col;
  }
  out.rank = col;
  return out;
}

namespace {

// Common denominator of all entries and the scaled integer matrix with
// the given vectors as columns.
IntMatrix integer_columns(const std::vector<RationalVector>& vs, std::size_t m, BigInt& den) {
  den = 1;
  for (const auto& v : vs) {
    if (v.size() != m) throw std::invalid_argument("lattice vectors must share one dimension");
    for (const auto& x : v) {
      BigInt d = x.den();
      den = den / gcd(den, d) * d;
    }
  }
  IntMatrix A(m, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) A(i, j) = (vs[j][i] * Rational(den)).num();
  return A;
}

}  // namespace

IntegerLattice IntegerLattice::standard(std::size_t m) {
  IntegerLattice L;
  L.basis_ = IntMatrix::identity(m);
  return L;
}

IntegerLattice IntegerLattice::generated_by(const std::vector<RationalVector>& generators) {
  if (generators.empty()) throw std::invalid_argument("lattice needs at least one generator");
  const std::size_t m = generators.front().size();
  IntegerLattice L;
  IntMatrix A = integer_columns(generators, m, L.den_);
  auto hnf = hermite_normal_form(A);
  if (hnf.rank != m) throw std::invalid_argument("lattice generators do not span the space");
  L.basis_ = IntMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) L.basis_(i, j) = hnf.H(i, j);
  // Remove a common factor shared by the whole basis and the denominator.
  BigInt g = L.den_;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g = gcd(g, L.basis_(i, j));
  if (g > 1) {
    L.den_ /= g;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) L.basis_(i, j) /= g;
  }
  return L;
}

IntegerLattice IntegerLattice::from_basis(const std::vector<RationalVector>& basis) {
  if (basis.empty() || basis.size() != basis.front().size())
    throw std::invalid_argument("lattice basis must be square");
  return generated_by(basis);
}

std::vector<RationalVector> IntegerLattice::basis() const {
  std::vector<RationalVector> out(dim(), RationalVector(dim()));
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < dim(); ++i) out[j][i] = Rational(basis_(i, j), den_);
  return out;
}

std::optional<std::vector<BigInt>> IntegerLattice::coordinates(const RationalVector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("lattice membership: dimension mismatch");
  RationalVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = v[i] * Rational(den_);
  auto x = solve(to_rational(basis_), scaled);
  if (!x) return std::nullopt;
  std::vector<BigInt> coords;
  for (const auto& c : *x) {
    if (!c.is_integer()) return std::nullopt;
    coords.push_back(c.num());
  }
  return coords;
}

Rational IntegerLattice::covolume() const {
  Rational d = determinant(to_rational(basis_));
  return abs(d) / pow(Rational(den_), static_cast<int>(dim()));
}

}  // namespace hamform::exact
