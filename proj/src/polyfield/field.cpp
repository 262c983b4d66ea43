#include "k3/field.hpp"

#include <ostream>

namespace k3 {

FieldContext FieldContext::quadratic(std::int64_t d) {
  if (d == 0 || d == 1) throw DomainError("quadratic field needs d != 0, 1");
  std::int64_t m = d < 0 ? -d : d;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) throw DomainError("quadratic field radicand must be squarefree: " + std::to_string(d));
  }
  return FieldContext(Kind::quadratic, d);
}

std::string FieldContext::to_string() const {
  if (!is_quadratic()) return "Q";
  return "Q(sqrt(" + std::to_string(d_) + "))";
}

FieldElement::FieldElement(FieldContext ctx, Rational x) : ctx_(ctx), x_(std::move(x)) {}

FieldElement::FieldElement(FieldContext ctx, Rational x, Rational y)
    : ctx_(ctx), x_(std::move(x)), y_(std::move(y)) {
  if (!ctx_.is_quadratic() && y_ != 0) throw DomainError("sqrt(d) component in the rational context");
}

FieldElement FieldElement::generator(FieldContext ctx) {
  if (!ctx.is_quadratic()) throw DomainError("the rational context has no generator w");
  return FieldElement(ctx, Rational(0), Rational(1));
}

void FieldElement::require_same(const FieldElement& o) const {
  if (!(ctx_ == o.ctx_)) throw ContextMismatch("field contexts differ: " + ctx_.to_string() + " vs " + o.ctx_.to_string());
}

FieldElement FieldElement::conjugate() const {
  FieldElement r = *this;
  r.y_ = -r.y_;
  return r;
}

Rational FieldElement::norm() const { return x_ * x_ - Rational(ctx_.d()) * y_ * y_; }

FieldElement FieldElement::inverse() const {
  Rational n = norm();
  if (n == 0) throw DomainError("inverse of zero");
  FieldElement r(ctx_);
  r.x_ = x_ / n;
  r.y_ = -y_ / n;
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.x_ = -r.x_;
  r.y_ = -r.y_;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same(o);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same(o);
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same(o);
  if (!ctx_.is_quadratic()) {
    x_ *= o.x_;
    return *this;
  }
  Rational nx = x_ * o.x_ + Rational(ctx_.d()) * y_ * o.y_;
  Rational ny = x_ * o.y_ + y_ * o.x_;
  x_ = std::move(nx);
  y_ = std::move(ny);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  require_same(o);
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  if (a.x_ != b.x_) return a.x_ < b.x_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.y_ != b.y_) return a.y_ < b.y_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string FieldElement::to_string() const {
  if (y_ == 0) return x_.str();
  std::string ypart;
  if (y_ == 1) {
    ypart = "w";
  } else if (y_ == -1) {
    ypart = "-w";
  } else {
    ypart = denominator(y_) == 1 ? y_.str() + "*w" : "(" + y_.str() + ")*w";
  }
  if (x_ == 0) return ypart;
  Rational ay = y_ < 0 ? Rational(-y_) : y_;
  std::string mag = ay == 1 ? std::string("w") : ay.str() + "*w";
  return "(" + x_.str() + (y_ < 0 ? " - " : " + ") + mag + ")";
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }

}  // namespace k3
