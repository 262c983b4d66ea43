#include "k3/parse.hpp"

#include <cctype>
#include <limits>

namespace k3 {

namespace {

constexpr int kMaxExponent = 4096;

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(const std::string& w) {
    skip();
    if (s_.compare(i_, w.size(), w) != 0) return false;
    i_ += w.size();
    return true;
  }
  std::string digits() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a number");
    return s_.substr(start, i_ - start);
  }
  int small_int() {
    const std::size_t at = pos();
    const std::string d = digits();
    if (d.size() > 9) throw ParseError("integer too large", at);
    return std::stoi(d);
  }
  std::string identifier() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    return s_.substr(start, i_ - start);
  }
  std::size_t pos() {
    skip();
    return i_;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos()); }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

class PolyParser {
 public:
  PolyParser(const std::string& text, const FieldContext& ctx, const Bindings& b) : in_(text), ctx_(ctx), b_(b) {}

  Poly run() {
    if (in_.done()) in_.fail("empty polynomial");
    Poly p = expr();
    if (!in_.done()) in_.fail(std::string("unexpected '") + in_.peek() + "'");
    return p;
  }

 private:
  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (in_.accept('+')) {
        acc += term();
      } else if (in_.accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (in_.accept('*')) {
        acc = acc * unary();
      } else if (in_.peek() == '/') {
        const std::size_t at = in_.pos();
        in_.accept('/');
        const Poly d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        if (!d.is_constant()) throw ParseError("division by a non-constant polynomial", at);
        acc *= d.leading().inverse();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (in_.accept('-')) return -unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (!in_.accept('^')) return base;
    const std::size_t at = in_.pos();
    const int e = in_.small_int();
    if (e > kMaxExponent) throw ParseError("exponent too large", at);
    return pow(base, e);
  }

  Poly primary() {
    const char c = in_.peek();
    if (c == '(') {
      in_.accept('(');
      Poly inner = expr();
      in_.expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Poly::constant(FieldElement(ctx_, Rational(Integer(in_.digits()))));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = in_.pos();
      const std::string name = in_.identifier();
      if (name == "t") return Poly::variable(ctx_);
      if (name == "w") {
        if (!ctx_.is_quadratic()) throw ParseError("'w' used over Q; declare the field with w2=d", at);
        return Poly::constant(FieldElement::generator(ctx_));
      }
      auto it = b_.find(name);
      if (it == b_.end()) throw ParseError("unknown name '" + name + "'", at);
      if (!(it->second.context() == ctx_)) throw ParseError("binding '" + name + "' lives in another field", at);
      return it->second;
    }
    if (c == '\0') in_.fail("unexpected end of input");
    in_.fail(std::string("unexpected '") + c + "'");
  }

  Cursor in_;
  FieldContext ctx_;
  const Bindings& b_;
};

CyclotomicMultiset multiset(Cursor& in) {
  CyclotomicMultiset m;
  in.expect('[');
  if (in.accept(']')) return m;
  do {
    const std::size_t at = in.pos();
    int* slot = nullptr;
    int d = 0;
    if (in.accept_word("Phi")) {
      in.expect('(');
      d = in.small_int();
      in.expect(')');
      if (d < 1) throw ParseError("Phi index must be positive", at);
      slot = &m.blocks[d];
    } else if (in.accept('-')) {
      if (in.small_int() != 1) throw ParseError("only the units 1 and -1 may be listed", at);
      slot = &m.minus_units;
    } else {
      if (in.small_int() != 1) throw ParseError("only the units 1 and -1 may be listed", at);
      slot = &m.plus_units;
    }
    int count = 1;
    if (in.accept('*')) count = in.small_int();
    if (count < 1) throw ParseError("multiplicity must be positive", at);
    *slot += count;
  } while (in.accept(','));
  in.expect(']');
  return m;
}

}  // namespace

Poly parse_poly(const std::string& text, const FieldContext& ctx, const Bindings& bindings) {
  return PolyParser(text, ctx, bindings).run();
}

FieldContext parse_field(const std::string& text) {
  if (text == "Q") return FieldContext::rationals();
  Cursor in(text);
  if (!in.accept_word("w2")) in.fail("field must be 'Q' or 'w2=d'");
  in.expect('=');
  const bool negative = in.accept('-');
  const std::size_t at = in.pos();
  const int d = in.small_int();
  if (!in.done()) in.fail("trailing characters in field spec");
  try {
    return FieldContext::quadratic(negative ? -d : d);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), at);
  }
}

std::pair<std::string, Poly> parse_binding(const std::string& text, const FieldContext& ctx,
                                           const Bindings& bindings) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw ParseError("binding must look like name=expr", text.size());
  Cursor in(text);
  const std::string name = in.identifier();
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])) || name == "t" || name == "w")
    throw ParseError("invalid binding name '" + name + "'", 0);
  in.expect('=');
  return {name, parse_poly(text.substr(eq + 1), ctx, bindings)};
}

CyclotomicMultiset parse_multiset(const std::string& text) {
  Cursor in(text);
  CyclotomicMultiset m = multiset(in);
  if (!in.done()) in.fail("trailing characters after multiset");
  return m;
}

IsometryPattern parse_pattern(const std::string& text) {
  Cursor in(text);
  IsometryPattern p;
  if (!in.accept_word("S")) in.fail("expected 'S:'");
  in.expect(':');
  p.algebraic = multiset(in);
  in.expect(';');
  if (!in.accept_word("T")) in.fail("expected 'T:'");
  in.expect(':');
  p.transcendental = multiset(in);
  if (!in.done()) in.fail("trailing characters after pattern");
  return p;
}

}  // namespace k3
