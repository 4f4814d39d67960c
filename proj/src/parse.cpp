#include <cctype>

#include "lu/errors.hpp"
#include "lu/polynomial.hpp"

namespace lu {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const VarNames& vars, Field field)
      : text_(text), vars_(vars), field_(field) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_ws();
      if (!accept('*')) return acc;
      acc *= unary();
    }
  }

  Polynomial unary() {
    skip_ws();
    if (accept('-')) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    skip_ws();
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected non-negative integer exponent");
    mpz_class e = integer();
    if (e > Monomial::kMaxExponent) throw ExponentOverflow("exponent exceeds 2^16 - 1");
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class v = integer();
      return Polynomial::constant(Scalar::from_rational(mpq_class(v), field_),
                                  vars_.size(), field_);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Polynomial::variable(i, vars_.size(), field_);
      throw UnknownVariable(name);
    }
    fail("unexpected character");
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return mpz_class(text_.substr(start, pos_ - start));
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(msg, line, col);
  }

  const std::string& text_;
  const VarNames& vars_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarNames& vars,
                            Field field) {
  return Parser(text, vars, field).parse();
}

}  // namespace lu
