#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "k3/scalar.hpp"

namespace k3 {

/// Either the rationals or a quadratic extension Q(sqrt d) with d squarefree
/// and not a perfect square. Elements of different contexts never mix.
class FieldContext {
 public:
  enum class Kind { rationals, quadratic };

  FieldContext() = default;

  static FieldContext rationals() { return {}; }
  /// Throws DomainError unless d is squarefree, nonzero and not 1.
  static FieldContext quadratic(std::int64_t d);

  Kind kind() const noexcept { return kind_; }
  bool is_quadratic() const noexcept { return kind_ == Kind::quadratic; }
  /// Radicand; 0 in the rational context.
  std::int64_t d() const noexcept { return d_; }

  std::string to_string() const;

  friend bool operator==(const FieldContext&, const FieldContext&) = default;

 private:
  FieldContext(Kind k, std::int64_t d) : kind_(k), d_(d) {}

  Kind kind_ = Kind::rationals;
  std::int64_t d_ = 0;
};

/// x + y*sqrt(d). In the rational context y is always zero.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(FieldContext ctx) : ctx_(ctx) {}
  FieldElement(FieldContext ctx, Rational x);
  /// Throws DomainError when y != 0 in the rational context.
  FieldElement(FieldContext ctx, Rational x, Rational y);

  static FieldElement zero(FieldContext ctx) { return FieldElement(ctx); }
  static FieldElement one(FieldContext ctx) { return FieldElement(ctx, Rational(1)); }
  /// sqrt(d) itself; DomainError in the rational context.
  static FieldElement generator(FieldContext ctx);

  const FieldContext& context() const noexcept { return ctx_; }
  const Rational& x() const noexcept { return x_; }
  const Rational& y() const noexcept { return y_; }

  bool is_zero() const noexcept { return x_ == 0 && y_ == 0; }
  bool is_one() const noexcept { return x_ == 1 && y_ == 0; }
  bool is_rational() const noexcept { return y_ == 0; }

  /// x - y*sqrt(d).
  FieldElement conjugate() const;
  /// x^2 - d*y^2.
  Rational norm() const;
  /// Throws DomainError on zero.
  FieldElement inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.ctx_ == b.ctx_ && a.x_ == b.x_ && a.y_ == b.y_;
  }
  /// Lexicographic on (x, y); only meaningful within one context.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  /// Grammar-valid text: "3", "-2/9", "(2/9)*w", "(1 + 3*w)".
  std::string to_string() const;

 private:
  void require_same(const FieldElement& o) const;

  FieldContext ctx_;
  Rational x_;
  Rational y_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace k3
