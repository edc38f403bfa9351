#include <cctype>

#include "curvehom/polynomial.hpp"

namespace curvehom {

namespace {

// Recursive-descent parser for the polynomial text format. Accepts the
// canonical output of Polynomial::to_string plus parentheses, implicit
// multiplication (`3x`, `2(x+1)`) and rational literals (`3/2`).
class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse polynomial '" + std::string(text_) + "': " + what +
                     " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expression() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  bool starts_factor() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_' || c == '(';
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        Rational d = integer();
        if (d == 0) fail("division by zero");
        acc *= Rational(1) / d;
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      Rational e = integer();
      if (e < 0 || e > 1000) fail("bad exponent");
      return base.pow(static_cast<unsigned>(e.get_num().get_ui()));
    }
    return base;
  }

  Rational integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Rational(mpz_class(std::string(text_.substr(start, pos_ - start))));
  }

  Polynomial primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational v = integer();
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
      return identifier(text_.substr(start, pos_ - start));
    }
    fail("expected a number, variable or '('");
  }

  // A run of identifier characters: an exact variable name, or a
  // concatenation of variable names such as `xy`.
  Polynomial identifier(std::string_view word) {
    const auto& vars = ring_->variables();
    Polynomial acc = Polynomial::constant(ring_, 1);
    std::size_t i = 0;
    while (i < word.size()) {
      std::size_t best = 0, best_len = 0;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        const auto& name = vars[v];
        if (name.size() > best_len && word.substr(i, name.size()) == name) {
          best = v;
          best_len = name.size();
        }
      }
      if (best_len == 0) fail("unknown variable in '" + std::string(word) + "'");
      acc = acc * Polynomial::variable(ring_, best);
      i += best_len;
    }
    return acc;
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const RingPtr& ring, std::string_view text) {
  if (!ring) throw InputError("parse needs a ring");
  return Parser(ring, text).parse();
}

}  // namespace curvehom
