#include "k3/poly.hpp"

#include <algorithm>
#include <ostream>

namespace k3 {

namespace {

void require_same(const Poly& a, const Poly& b) {
  if (!(a.context() == b.context()))
    throw ContextMismatch("polynomial contexts differ: " + a.context().to_string() + " vs " +
                          b.context().to_string());
}

bool is_negative_coefficient(const FieldElement& c) { return c.x() < 0 || (c.x() == 0 && c.y() < 0); }

std::string power_of_t(int k) { return k == 1 ? std::string("t") : "t^" + std::to_string(k); }

}  // namespace

Poly::Poly(FieldContext ctx, std::vector<FieldElement> coefficients) : ctx_(ctx), c_(std::move(coefficients)) {
  for (const auto& c : c_) {
    if (!(c.context() == ctx_)) throw ContextMismatch("coefficient context differs from polynomial context");
  }
  trim();
}

Poly::Poly(FieldContext ctx, std::initializer_list<Rational> coefficients) : ctx_(ctx) {
  c_.reserve(coefficients.size());
  for (const auto& r : coefficients) c_.emplace_back(ctx, r);
  trim();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.context(), std::vector<FieldElement>{c}); }

Poly Poly::monomial(const FieldElement& c, int k) {
  if (k < 0) throw DomainError("negative exponent");
  std::vector<FieldElement> v(static_cast<std::size_t>(k) + 1, FieldElement::zero(c.context()));
  v.back() = c;
  return Poly(c.context(), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return FieldElement::zero(ctx_);
  return c_[static_cast<std::size_t>(k)];
}

const FieldElement& Poly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  if (is_monic()) return *this;
  return *this * leading().inverse();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(ctx_);
  std::vector<FieldElement> d;
  d.reserve(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    d.push_back(c_[k] * FieldElement(ctx_, Rational(static_cast<long>(k))));
  return Poly(ctx_, std::move(d));
}

FieldElement Poly::evaluate(const FieldElement& at) const {
  FieldElement acc = FieldElement::zero(ctx_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::reversed(int width) const {
  if (width < degree()) throw DomainError("reversal width below degree");
  if (is_zero()) return *this;
  std::vector<FieldElement> r(static_cast<std::size_t>(width) + 1, FieldElement::zero(ctx_));
  for (std::size_t k = 0; k < c_.size(); ++k) r[static_cast<std::size_t>(width) - k] = c_[k];
  return Poly(ctx_, std::move(r));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FieldElement::zero(ctx_));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FieldElement::zero(ctx_));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.context());
  std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, FieldElement::zero(a.context()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(a.context(), std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const FieldElement& s) {
  if (!(s.context() == ctx_)) throw ContextMismatch("scalar context differs from polynomial context");
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t k = 0; k < a.c_.size(); ++k) {
    auto c = a.c_[k] <=> b.c_[k];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const FieldElement& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    bool negative = is_negative_coefficient(c);
    FieldElement mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += power_of_t(k);
    } else {
      out += mag.to_string() + "*" + power_of_t(k);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly pow(const Poly& p, int e) {
  if (e < 0) throw DomainError("negative polynomial power");
  Poly result = Poly::constant(FieldElement::one(p.context()));
  Poly base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

DivMod divmod(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const FieldContext ctx = a.context();
  if (a.degree() < b.degree()) return {Poly(ctx), a};
  std::vector<FieldElement> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const FieldElement inv_lead = b.leading().inverse();
  std::vector<FieldElement> quo(static_cast<std::size_t>(a.degree() - db) + 1, FieldElement::zero(ctx));
  for (int k = a.degree(); k >= db; --k) {
    FieldElement coef = rem[static_cast<std::size_t>(k)];
    if (coef.is_zero()) continue;
    coef *= inv_lead;
    quo[static_cast<std::size_t>(k - db)] = coef;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= coef * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(ctx, std::move(quo)), Poly(ctx, std::move(rem))};
}

bool divides(const Poly& b, const Poly& a) { return divmod(a, b).remainder.is_zero(); }

Poly poly_gcd(const Poly& p, const Poly& q) {
  require_same(p, q);
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  Poly a = p.monic();
  Poly b = q.monic();
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

namespace {

Poly exact_quotient(const Poly& a, const Poly& b) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw ContractViolation("inexact polynomial division");
  return std::move(qr.quotient);
}

}  // namespace

SquarefreeDecomposition squarefree_decompose(const Poly& p) {
  if (p.degree() < 1) throw DomainError("squarefree decomposition needs a nonconstant polynomial");
  SquarefreeDecomposition out{p.leading(), {}};
  const Poly f = p.monic();
  const Poly df = f.derivative();
  const Poly a0 = poly_gcd(f, df);
  Poly b = exact_quotient(f, a0);
  Poly c = exact_quotient(df, a0);
  Poly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Poly a = poly_gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.factors.emplace_back(std::move(a), i);
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() < 1) throw DomainError("squarefree part needs a nonconstant polynomial");
  const Poly f = p.monic();
  return exact_quotient(f, poly_gcd(f, f.derivative()));
}

GcdFreeBasis gcdfree_basis(const std::vector<Poly>& inputs) {
  if (inputs.empty()) throw DomainError("gcd-free basis of an empty list");
  std::vector<Poly> work;
  for (const auto& p : inputs) {
    require_same(inputs.front(), p);
    if (p.is_zero()) throw DomainError("gcd-free basis input is the zero polynomial");
    if (p.degree() < 1) continue;
    for (auto& [f, m] : squarefree_decompose(p).factors) {
      if (std::find(work.begin(), work.end(), f) == work.end()) work.push_back(std::move(f));
    }
  }

  // Replace any non-coprime pair {a, b} by {a/g, g, b/g}. The total degree
  // strictly drops on each step, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
        Poly g = poly_gcd(work[i], work[j]);
        if (g.degree() < 1) continue;
        std::vector<Poly> pieces{exact_quotient(work[i], g), g, exact_quotient(work[j], g)};
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto& piece : pieces) {
          if (piece.degree() >= 1 && std::find(work.begin(), work.end(), piece) == work.end())
            work.push_back(std::move(piece));
        }
        changed = true;
      }
    }
  }
  std::sort(work.begin(), work.end());

  GcdFreeBasis out;
  out.basis = std::move(work);
  for (const auto& p : inputs) {
    std::vector<int> row;
    Poly rest = p;
    for (const auto& q : out.basis) {
      int e = 0;
      for (;;) {
        DivMod qr = divmod(rest, q);
        if (!qr.remainder.is_zero()) break;
        rest = std::move(qr.quotient);
        ++e;
      }
      row.push_back(e);
    }
    if (rest.degree() != 0) throw ContractViolation("gcd-free basis does not reassemble an input");
    out.exponents.push_back(std::move(row));
    out.contents.push_back(rest.leading());
  }
  return out;
}

int Valuation::value() const {
  if (omega_) throw DomainError("finite value of an infinite valuation");
  return v_;
}

Valuation Valuation::minus(int k) const { return omega_ ? *this : Valuation(v_ - k); }

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) noexcept {
  if (a.omega_ || b.omega_) return static_cast<int>(a.omega_) <=> static_cast<int>(b.omega_);
  return a.v_ <=> b.v_;
}

std::string Valuation::to_string() const { return omega_ ? std::string("omega") : std::to_string(v_); }

Place Place::finite(Poly generator) {
  if (generator.degree() < 1) throw DomainError("place generator must have degree >= 1");
  if (!generator.is_monic()) throw DomainError("place generator must be monic");
  if (poly_gcd(generator, generator.derivative()).degree() > 0)
    throw DomainError("place generator must be squarefree");
  return Place(std::move(generator));
}

const Poly& Place::generator() const {
  if (!gen_) throw DomainError("the place at infinity has no generator");
  return *gen_;
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.is_infinity() || b.is_infinity())
    return static_cast<int>(a.is_infinity()) <=> static_cast<int>(b.is_infinity());
  return *a.gen_ <=> *b.gen_;
}

Valuation valuation(const Poly& p, const Place& place) {
  if (place.is_infinity()) throw DomainError("valuation at infinity needs the coordinate flip u = 1/t");
  require_same(p, place.generator());
  if (p.is_zero()) return Valuation::omega();
  int m = 0;
  Poly rest = p;
  for (;;) {
    DivMod qr = divmod(rest, place.generator());
    if (!qr.remainder.is_zero()) break;
    rest = std::move(qr.quotient);
    ++m;
  }
  return Valuation(m);
}

}  // namespace k3
