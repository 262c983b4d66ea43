#include <cctype>

#include "k3/lattice.hpp"

namespace k3 {

namespace {

class LatticeParser {
 public:
  explicit LatticeParser(const std::string& text) : s_(text) {}

  Lattice parse() {
    skip();
    if (at_end()) throw ParseError("empty lattice expression", pos_);
    Lattice l = sum();
    skip();
    if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return l;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return !at_end() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Lattice sum() {
    Lattice l = summand();
    while (peek('+')) {
      ++pos_;
      l = l + summand();
    }
    return l;
  }

  Lattice summand() {
    Lattice l = atom();
    while (peek('(')) {
      ++pos_;
      const std::size_t at = pos_;
      Integer m = integer(true);
      expect(')');
      if (m == 0) throw DomainError("twist by zero at position " + std::to_string(at));
      l = l.twisted(m);
    }
    return l;
  }

  Lattice atom() {
    skip();
    if (at_end()) throw ParseError("expected a lattice", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Lattice l = sum();
      expect(')');
      return l;
    }
    if (c == 'U') {
      ++pos_;
      return hyperbolic_plane();
    }
    if (c == 'A' || c == 'D' || c == 'E') {
      ++pos_;
      int n = 0;
      if (peek('(')) {
        ++pos_;
        n = small_index();
        expect(')');
      } else {
        n = small_index();
      }
      if (c == 'A') return root_lattice_a(n);
      if (c == 'D') return root_lattice_d(n);
      return root_lattice_e(n);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  int small_index() {
    const std::size_t at = pos_;
    Integer n = integer(false);
    if (n > 4096) throw DomainError("root lattice index too large at position " + std::to_string(at));
    return static_cast<int>(n);
  }

  Integer integer(bool allow_sign) {
    skip();
    bool negative = false;
    if (allow_sign && !at_end() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negative = s_[pos_] == '-';
      ++pos_;
      skip();
    }
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    Integer v(s_.substr(start, pos_ - start));
    return negative ? Integer(-v) : v;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Lattice build_lattice(const std::string& expr) { return LatticeParser(expr).parse(); }

}  // namespace k3
