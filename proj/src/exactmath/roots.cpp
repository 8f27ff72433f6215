// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The hamform authors

#include "hamform/exactmath/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamform::exact {

bool RealInterval::contains(const Rational& x) const {
  if (lower && (lower_open ? x <= *lower : x < *lower)) return false;
  if (upper && (upper_open ? x >= *upper : x > *upper)) return false;
  return true;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p};
  if (p.degree() <= 0) return seq;
  seq.push_back(p.derivative());
  while (true) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int sign_variations(const std::vector<Polynomial>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : seq) {
    int s = q(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational cauchy_root_bound(const Polynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, abs(p.coefficient(k) / p.leading()));
  return m + Rational(1);
}

namespace {

struct Isolator {
  const Polynomial& f;
  std::vector<Polynomial> seq;
  Rational width;

  // Roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return sign_variations(seq, a) - sign_variations(seq, b); }

  void isolate(Rational a, Rational b, int n, std::vector<std::pair<Rational, Rational>>& out) const {
    if (n == 0) return;
    if (n == 1) {
      out.push_back(refine(std::move(a), std::move(b)));
      return;
    }
    Rational m = (a + b) / Rational(2);
    int left = count(a, m);
    isolate(a, m, left, out);
    isolate(m, b, n - left, out);
  }

  // Single root in (a, b]; shrinks until narrower than width.
  std::pair<Rational, Rational> refine(Rational a, Rational b) const {
    if (f(b).is_zero()) return {b, b};
    while (b - a >= width) {
      Rational m = (a + b) / Rational(2);
      if (f(m).is_zero()) return {m, m};
      if (count(a, m) == 1) b = m;
      else a = m;
    }
    return {a, b};
  }
};

}  // namespace

std::vector<RealRoot> real_roots(const Polynomial& p, const RealInterval& where, double tol) {
  if (p.is_zero()) throw std::invalid_argument("real_roots: the zero polynomial has every number as a root");
  if (!(tol > 0)) throw std::invalid_argument("real_roots: tolerance must be positive");
  if (where.lower && where.upper && *where.lower > *where.upper)
    throw std::invalid_argument("real_roots: empty interval");

  std::vector<RealRoot> roots;
  auto factors = square_free_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Polynomial& f = factors[i];
    if (f.degree() < 1) continue;
    Rational bound = cauchy_root_bound(f);
    Rational lo = where.lower ? *where.lower : -bound;
    Rational hi = where.upper ? *where.upper : bound;
    Isolator iso{f, sturm_sequence(f), Rational::from_double(tol)};
    std::vector<std::pair<Rational, Rational>> found;
    if (f.degree() == 1) {
      Rational r = -f.coefficient(0) / f.coefficient(1);
      if (where.contains(r)) found.emplace_back(r, r);
    } else if (lo == hi) {
      if (f(lo).is_zero() && !where.lower_open && !where.upper_open) found.emplace_back(lo, lo);
    } else {
      if (!where.lower_open && f(lo).is_zero()) found.emplace_back(lo, lo);
      iso.isolate(lo, hi, iso.count(lo, hi), found);
      if (where.upper_open && f(hi).is_zero()) {
        std::erase_if(found, [&](const auto& r) { return r.first == hi && r.second == hi; });
      }
    }
    for (auto& [a, b] : found) {
      RealRoot r;
      r.value = ((a + b) / Rational(2)).to_double();
      r.multiplicity = static_cast<int>(i + 1);
      r.lower = a;
      r.upper = b;
      roots.push_back(std::move(r));
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RealRoot& x, const RealRoot& y) { return x.lower < y.lower; });
  return roots;
}

}  // namespace hamform::exact
