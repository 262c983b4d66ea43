#pragma once

#include <map>
#include <string>

#include "k3/isometry.hpp"
#include "k3/poly.hpp"

namespace k3 {

using Bindings = std::map<std::string, Poly>;

/// Polynomial in t over `ctx`:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*     '/' only by a nonzero constant
///   unary   := '-' unary | power
///   power   := primary ('^' digits)?
///   primary := digits | 't' | 'w' | name | '(' expr ')'
///
/// `w` is the generator sqrt(d) of a quadratic context; names are looked up
/// in `bindings`. Whitespace is ignored. ParseError (with a byte offset) on
/// any syntax error, an unknown name, `w` over Q or division by a
/// non-constant.
Poly parse_poly(const std::string& text, const FieldContext& ctx, const Bindings& bindings = {});

/// "Q" or "w2=d" (w^2 = d).
FieldContext parse_field(const std::string& text);

/// "name=expr" as used by --let; the expression is parsed with `bindings`.
std::pair<std::string, Poly> parse_binding(const std::string& text, const FieldContext& ctx,
                                           const Bindings& bindings);

/// "[1*4, -1*8]", "[Phi(11)]", "[Phi(1)*2, Phi(11)]", "[]".
CyclotomicMultiset parse_multiset(const std::string& text);

/// "S: <multiset>; T: <multiset>".
IsometryPattern parse_pattern(const std::string& text);

}  // namespace k3
