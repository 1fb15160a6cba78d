#include "quadric/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "quadric/error.hpp"

namespace quadric {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    throw ParseError(what, pos_, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'", {std::string(1, c)});
  }

  bool at_end() { return peek() == '\0'; }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input", {"end of input"});
  }

  std::size_t position() const { return pos_; }

  // expr := term (('+' | '-') term)*
  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  // term := unary (('*' | '/') unary)*
  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (peek() == '*') {
        ++pos_;
        acc *= unary();
      } else if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division by a non-constant or zero expression", {"nonzero constant"});
        }
        acc = d.constant_term().inverse() * acc;
      } else {
        return acc;
      }
    }
  }

  // unary := ('-' | '+') unary | power
  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  // power := atom ('^' natural)?
  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        fail("expected exponent", {"natural number"});
      }
      const std::size_t at = pos_;
      const mpz_class e = digits();
      if (e > 65535) {
        pos_ = at;
        fail("exponent too large", {"natural number <= 65535"});
      }
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial atom() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(Scalar(mpq_class(digits())));
    if (c == 'x') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] >= '1' && s_[pos_] <= '4') {
        return Polynomial::variable(s_[pos_++] - '0');
      }
      fail("unknown variable", {"x1", "x2", "x3", "x4"});
    }
    if (c == 'i') {
      ++pos_;
      return Polynomial(Scalar::i());
    }
    if (accept('(')) {
      Polynomial inner = expr();
      expect(')');
      return inner;
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'",
         {"integer", "x1", "x2", "x3", "x4", "i", "("});
  }

  Scalar constant() {
    const std::size_t at = position();
    Polynomial p = expr();
    if (!p.is_constant()) {
      pos_ = at;
      fail("expected a constant", {"constant expression"});
    }
    return p.constant_term();
  }

  // Word grammar.
  TameWord word() {
    TameWord w;
    w.letters.push_back(letter());
    while (accept('*')) w.letters.push_back(letter());
    expect_end();
    return w;
  }

  Letter letter() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string_view rest = s_.substr(pos_);
    for (Family f : {Family::E34, Family::E12, Family::E24, Family::E13}) {
      const std::string name = family_name(f);
      if (rest.substr(0, name.size()) == name) {
        pos_ += name.size();
        return elementary(f, at);
      }
    }
    if (accept('T')) return OrthogonalAutom::transposition();
    if (accept('L')) return OrthogonalAutom::make(SL2Matrix::make(matrix()), {}, false);
    if (accept('R')) return OrthogonalAutom::make({}, SL2Matrix::make(matrix()), false);
    fail("expected a letter", {"E34", "E12", "E24", "E13", "L", "R", "T"});
  }

  ElementaryAutom elementary(Family f, std::size_t at) {
    expect('(');
    Scalar a(1), b(1);
    std::optional<Polynomial> h;
    bool seen_a = false, seen_b = false;
    do {
      const char key = peek();
      const std::size_t key_at = pos_;
      if (key != 'a' && key != 'b' && key != 'h') fail("expected parameter name", {"a", "b", "h"});
      ++pos_;
      expect('=');
      if ((key == 'a' && seen_a) || (key == 'b' && seen_b) || (key == 'h' && h)) {
        pos_ = key_at;
        fail("duplicate parameter", {"a", "b", "h"});
      }
      if (key == 'a') {
        a = constant();
        seen_a = true;
      } else if (key == 'b') {
        b = constant();
        seen_b = true;
      } else {
        h = expr();
      }
    } while (accept(','));
    expect(')');
    if (!h) {
      pos_ = at;
      fail("elementary letter without h", {"h="});
    }
    return ElementaryAutom::make(f, a, b, *h);
  }

  Mat2 matrix() {
    Mat2 m;
    expect('[');
    expect('[');
    m.a = constant();
    expect(',');
    m.b = constant();
    expect(']');
    expect(',');
    expect('[');
    m.c = constant();
    expect(',');
    m.d = constant();
    expect(']');
    expect(']');
    return m;
  }

  std::array<Polynomial, 4> quadruple() {
    std::array<Polynomial, 4> f;
    expect('(');
    for (std::size_t k = 0; k < 4; ++k) {
      if (k > 0) expect(',');
      f[k] = expr();
    }
    expect(')');
    expect_end();
    return f;
  }

 private:
  mpz_class digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  Parser p(text);
  Polynomial out = p.expr();
  p.expect_end();
  return out;
}

TameWord parse_tame_word(std::string_view text) {
  Parser p(text);
  return p.word();
}

Autom parse_autom(std::string_view text) {
  Parser p(text);
  if (p.peek() == '(') return Autom::make(p.quadruple());
  return word_to_autom(p.word());
}

}  // namespace quadric
