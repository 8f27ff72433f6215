// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hamform::exact {

using BigInt = mpz_class;

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long n) : value_(n) {}
  Rational(const BigInt& n) : value_(n) {}
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p", "p/q" or a terminating decimal such as "-1.25".
  static Rational parse(std::string_view text);
  /// Exact value of a finite double.
  static Rational from_double(double x);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  double to_double() const { return value_.get_d(); }
  std::string str() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_;
};

Rational abs(const Rational& x);
Rational pow(const Rational& x, int k);
BigInt floor(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

using RationalVector = std::vector<Rational>;

Rational dot(const RationalVector& a, const RationalVector& b);
std::vector<double> to_double(const RationalVector& v);

BigInt gcd(const BigInt& a, const BigInt& b);
/// Returns g = gcd(a, b) >= 0 together with s, t such that s*a + t*b = g.
BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t);

}  // namespace hamform::exact
