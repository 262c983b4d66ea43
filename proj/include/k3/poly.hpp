#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3/field.hpp"

namespace k3 {

/// Dense univariate polynomial in t over a FieldContext. Coefficients are
/// stored lowest degree first with no trailing zeros; the zero polynomial has
/// no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldContext ctx) : ctx_(ctx) {}
  Poly(FieldContext ctx, std::vector<FieldElement> coefficients);
  /// Convenience for rational coefficients, lowest degree first.
  Poly(FieldContext ctx, std::initializer_list<Rational> coefficients);

  static Poly constant(const FieldElement& c);
  static Poly constant(FieldContext ctx, const Rational& c) { return constant(FieldElement(ctx, c)); }
  /// c * t^k.
  static Poly monomial(const FieldElement& c, int k);
  static Poly variable(FieldContext ctx) { return monomial(FieldElement::one(ctx), 1); }

  const FieldContext& context() const noexcept { return ctx_; }
  const std::vector<FieldElement>& coefficients() const noexcept { return c_; }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }

  /// Coefficient of t^k; zero outside the stored range.
  FieldElement coeff(int k) const;
  /// DomainError on the zero polynomial.
  const FieldElement& leading() const;

  Poly monic() const;
  Poly derivative() const;
  FieldElement evaluate(const FieldElement& at) const;
  /// u^width * p(1/u); DomainError if width < degree.
  Poly reversed(int width) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const FieldElement& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const FieldElement& s) { return a *= s; }
  friend Poly operator*(const FieldElement& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }
  /// Canonical order: degree first, then coefficients from the lowest degree up.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  /// Grammar-valid text, highest degree first: "t^11 - 1", "27*t^2 - (4/3)*w*t".
  std::string to_string() const;

 private:
  void trim();

  FieldContext ctx_;
  std::vector<FieldElement> c_;
};

Poly pow(const Poly& p, int e);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; DomainError when the divisor is zero.
DivMod divmod(const Poly& a, const Poly& b);

/// True iff b divides a exactly (b nonzero).
bool divides(const Poly& b, const Poly& a);

/// Monic gcd. Throws ContextMismatch on differing contexts and DomainError
/// when both inputs are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

/// p = content * prod factors[i].first ^ factors[i].second, with monic,
/// squarefree, pairwise coprime factors and distinct multiplicities.
struct SquarefreeDecomposition {
  FieldElement content;
  std::vector<std::pair<Poly, int>> factors;
};

/// Yun's algorithm (characteristic zero). DomainError on constant input.
SquarefreeDecomposition squarefree_decompose(const Poly& p);

/// Product of the distinct monic irreducible factors of p (p nonconstant).
Poly squarefree_part(const Poly& p);

/// inputs[i] = contents[i] * prod_j basis[j] ^ exponents[i][j].
struct GcdFreeBasis {
  std::vector<Poly> basis;
  std::vector<std::vector<int>> exponents;
  std::vector<FieldElement> contents;
};

/// Coprime basis refinement: monic, squarefree, pairwise coprime basis
/// elements in canonical order. Constant inputs are allowed and get an
/// all-zero exponent row. DomainError on an empty list or a zero input.
GcdFreeBasis gcdfree_basis(const std::vector<Poly>& inputs);

/// Order of vanishing, with the infinite value for the zero polynomial.
class Valuation {
 public:
  constexpr Valuation(int v = 0) noexcept : v_(v) {}  // NOLINT: implicit from int on purpose
  static constexpr Valuation omega() noexcept {
    Valuation r;
    r.omega_ = true;
    return r;
  }

  constexpr bool is_omega() const noexcept { return omega_; }
  /// DomainError on omega.
  int value() const;

  /// omega - k = omega.
  Valuation minus(int k) const;
  /// omega compares greater than every finite value.
  constexpr bool at_least(int k) const noexcept { return omega_ || v_ >= k; }

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) noexcept {
    return a.omega_ == b.omega_ && (a.omega_ || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) noexcept;

  std::string to_string() const;

 private:
  int v_ = 0;
  bool omega_ = false;
};

/// A closed point of P^1: a monic squarefree generator, or infinity.
class Place {
 public:
  static Place infinity() { return Place(); }
  /// DomainError unless the generator is monic, squarefree, degree >= 1.
  static Place finite(Poly generator);

  bool is_infinity() const noexcept { return !gen_.has_value(); }
  /// DomainError at infinity.
  const Poly& generator() const;
  /// Number of geometric points carried by the place.
  int degree() const noexcept { return gen_ ? gen_->degree() : 1; }

  std::string to_string() const { return gen_ ? gen_->to_string() : std::string("infinity"); }

  friend bool operator==(const Place& a, const Place& b) = default;
  /// Finite places ordered by generator, infinity last.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);

 private:
  Place() = default;
  explicit Place(Poly g) : gen_(std::move(g)) {}

  std::optional<Poly> gen_;
};

/// Largest m with generator^m | p; omega for p = 0. DomainError at infinity;
/// ContextMismatch when contexts differ.
Valuation valuation(const Poly& p, const Place& place);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace k3
