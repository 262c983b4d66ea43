#include <algorithm>

#include "k3/ellsurf.hpp"

namespace k3 {

namespace {

int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }

}  // namespace

Poly discriminant(const Poly& a, const Poly& b) {
  const FieldContext& ctx = a.context();
  return FieldElement(ctx, Rational(4)) * pow(a, 3) + FieldElement(ctx, Rational(27)) * pow(b, 2);
}

WeierstrassModel::WeierstrassModel(Poly a, Poly b) : a_(std::move(a)), b_(std::move(b)) {
  if (!(a_.context() == b_.context())) throw ContextMismatch("a(t) and b(t) live in different fields");
  if (discriminant(a_, b_).is_zero()) throw InvalidModel("discriminant 4a^3 + 27b^2 vanishes identically");
  k_ = std::max({1, ceil_div(a_.degree(), 4), ceil_div(b_.degree(), 6)});
}

Poly discriminant(const WeierstrassModel& m) { return discriminant(m.a(), m.b()); }

WeierstrassModel WeierstrassModel::at_infinity() const {
  return WeierstrassModel(a_.reversed(4 * k_), b_.reversed(6 * k_));
}

std::string RationalFunction::to_string() const {
  if (denominator.degree() == 0 && denominator.is_monic()) return numerator.to_string();
  return "(" + numerator.to_string() + ")/(" + denominator.to_string() + ")";
}

RationalFunction j_map(const WeierstrassModel& m) {
  const FieldContext& ctx = m.context();
  Poly num = FieldElement(ctx, Rational(4)) * pow(m.a(), 3);
  Poly den = discriminant(m);
  if (num.is_zero()) return {num, Poly::constant(FieldElement::one(ctx))};
  const Poly g = poly_gcd(num, den);
  num = divmod(num, g).quotient;
  den = divmod(den, g).quotient;
  const FieldElement scale = den.leading().inverse();
  return {num * scale, den * scale};
}

LocalValuations minimalize_at_place(const WeierstrassModel& m, const Place& place) {
  return minimalize(valuation(m.a(), place), valuation(m.b(), place), valuation(discriminant(m), place));
}

std::string SurfaceClass::to_string() const {
  switch (kind) {
    case Kind::rational: return "rational";
    case Kind::k3: return "K3";
    case Kind::other: return "other(k=" + std::to_string(k) + ")";
  }
  return "?";
}

namespace {

KodairaFiber classify(const Place& place, const LocalValuations& raw) {
  LocalValuations v = minimalize(raw.va, raw.vb, raw.vd);
  std::optional<KodairaType> type = kodaira_type_from_valuations(v.va, v.vb, v.vd);
  if (!type) throw ContractViolation("valuations still non-minimal after reduction");
  return {place, *type, v};
}

}  // namespace

FiberAnalysis analyze_fibers(const WeierstrassModel& m) {
  FiberAnalysis out;
  out.k = m.k();
  const Poly delta = discriminant(m);

  // t itself is added so that the place t = 0 is always split off.
  std::vector<Poly> inputs{Poly::variable(m.context())};
  for (const Poly* p : {&m.a(), &m.b(), &delta})
    if (!p->is_zero()) inputs.push_back(*p);
  const GcdFreeBasis basis = gcdfree_basis(inputs);

  auto record = [&](KodairaFiber fiber) {
    if (fiber.valuations.reductions > 0) out.globally_minimal = false;
    if (fiber.type.is_smooth()) return;
    out.euler_total += fiber.degree() * fiber.euler();
    out.fibers.push_back(std::move(fiber));
  };

  for (const Poly& g : basis.basis) {
    const Place place = Place::finite(g);
    record(classify(place, {valuation(m.a(), place), valuation(m.b(), place), valuation(delta, place)}));
  }

  const WeierstrassModel flipped = m.at_infinity();
  const Place origin = Place::finite(Poly::variable(m.context()));
  record(classify(Place::infinity(), {valuation(flipped.a(), origin), valuation(flipped.b(), origin),
                                      valuation(discriminant(flipped), origin)}));

  out.surface.k = out.k;
  if (out.globally_minimal && out.euler_consistent()) {
    out.surface.kind = out.k == 1   ? SurfaceClass::Kind::rational
                       : out.k == 2 ? SurfaceClass::Kind::k3
                                    : SurfaceClass::Kind::other;
  }
  return out;
}

}  // namespace k3
