#include "symbez/parse.hpp"

#include <cctype>
#include <string>

#include "symbez/errors.hpp"

namespace symbez {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int num_vars, BasisMode mode) : text_(text), n_(num_vars), mode_(mode) {}

  MultiPoly run() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    MultiPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (accept('^')) {
      skip_ws();
      const size_t start = pos_;
      const mpz_class e = integer();
      if (!e.fits_uint_p() || e > 4096) throw ParseError("exponent too large", start);
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  mpz_class integer() {
    skip_ws();
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a nonnegative integer", start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  MultiPoly base() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        skip_ws();
        const size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      return MultiPoly::constant(n_, Cyclo12(make_rational(num, den)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return identifier(std::string(text_.substr(start, pos_ - start)), start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  MultiPoly identifier(const std::string& id, size_t at) {
    if (id == "omega") return MultiPoly::constant(n_, Cyclo12::omega());
    if (id == "I") return MultiPoly::constant(n_, Cyclo12::imag_unit());
    int var = -1;
    if (id == "X") var = 0;
    if (id == "Y") var = 1;
    if (id == "Z") var = 2;
    if (id == "W") var = 3;
    if (id.size() == 2 && id[0] == 'x' && id[1] >= '0' && id[1] <= '3') var = id[1] - '0';
    if (var >= 0) {
      if (var >= n_) throw ParseError("variable " + id + " is not available with " + std::to_string(n_) + " variables", at);
      return MultiPoly::variable(n_, var);
    }
    if (id.size() == 2 && id[0] == 'e' && id[1] >= '1' && id[1] <= '4') {
      const int k = id[1] - '0';
      if (mode_ != BasisMode::kElementary) throw ParseError("elementary variable " + id + " requires elementary basis mode", at);
      if (k > n_) throw ParseError("variable " + id + " is not available with " + std::to_string(n_) + " variables", at);
      return elementary_symmetric(n_, k);
    }
    throw ParseError("unknown identifier '" + id + "'", at);
  }

  std::string_view text_;
  size_t pos_ = 0;
  int n_;
  BasisMode mode_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, int num_vars, BasisMode mode) {
  if (num_vars < 1 || num_vars > kMaxVars) throw std::invalid_argument("parse_poly: 1 to 4 variables");
  return Parser(text, num_vars, mode).run();
}

}  // namespace symbez
