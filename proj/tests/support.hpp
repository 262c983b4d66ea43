#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "k3/ellsurf.hpp"
#include "k3/poly.hpp"

namespace k3::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, int bound) {
  return Rational(uniform(rng, -bound, bound)) / Rational(uniform(rng, 1, 3));
}

inline FieldElement random_element(Rng& rng, const FieldContext& ctx, int bound) {
  if (!ctx.is_quadratic()) return FieldElement(ctx, random_rational(rng, bound));
  return FieldElement(ctx, random_rational(rng, bound), uniform(rng, 0, 2) ? Rational(0) : random_rational(rng, bound));
}

/// Degree exactly `degree` (nonzero leading coefficient) for degree >= 0.
inline Poly random_poly(Rng& rng, const FieldContext& ctx, int degree, int bound = 5) {
  std::vector<FieldElement> c;
  for (int k = 0; k <= degree; ++k) c.push_back(random_element(rng, ctx, bound));
  while (degree >= 0 && c.back().is_zero()) c.back() = random_element(rng, ctx, bound);
  return Poly(ctx, std::move(c));
}

inline Poly linear(const FieldContext& ctx, const Rational& root) {
  return Poly(ctx, {FieldElement(ctx, -root), FieldElement::one(ctx)});
}

/// Plain Gaussian elimination over Q, independent of the library's Bareiss.
inline Rational gauss_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

/// Resultant of two rational polynomials via the Sylvester matrix.
inline Rational sylvester_resultant(const Poly& p, const Poly& q) {
  const int m = p.degree(), n = q.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + m - k] = p.coeff(k).x();
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + n - k] = q.coeff(k).x();
  return gauss_det(s);
}

// Planted random model: a = (t - r)^i * p, b = (t - r)^j * q with deg a <= 4k, deg b <= 6k.
inline WeierstrassModel planted_model(Rng& rng, const FieldContext& ctx, int k) {
  for (;;) {
    const Poly l = linear(ctx, Rational(uniform(rng, -3, 3)));
    const int i = uniform(rng, 0, 5), j = uniform(rng, 0, 7);
    Poly a = uniform(rng, 0, 5) == 0 ? Poly(ctx)
                                     : pow(l, i) * random_poly(rng, ctx, uniform(rng, 0, std::max(0, 4 * k - i)), 3);
    Poly b = uniform(rng, 0, 5) == 0 ? Poly(ctx)
                                     : pow(l, j) * random_poly(rng, ctx, uniform(rng, 0, std::max(0, 6 * k - j)), 3);
    if (a.degree() > 4 * k || b.degree() > 6 * k) continue;
    if (discriminant(a, b).is_zero()) continue;
    WeierstrassModel m(a, b);
    if (m.k() != k) continue;
    return m;
  }
}

}  // namespace k3::testing
