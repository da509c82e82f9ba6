#include "quatinv/scalar_parser.hpp"

#include <cctype>

#include "quatinv/errors.hpp"

namespace quatinv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Field field, const TowerNames& names)
      : text_(text), field_(field), names_(names) {}

  LaurentScalar parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty scalar literal");
    LaurentScalar value = expression();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"",
                     pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  LaurentScalar expression() {
    LaurentScalar value = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        value = value + term();
      } else if (peek('-')) {
        ++pos_;
        value = value - term();
      } else {
        return value;
      }
    }
  }

  LaurentScalar term() {
    LaurentScalar value = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        value = value * unary();
      } else if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        LaurentScalar d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        value = value / d;
      } else if (starts_primary()) {
        value = value * power();  // juxtaposition: "5t", "t1t2", "2(1+t)"
      } else {
        return value;
      }
    }
  }

  bool starts_primary() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  LaurentScalar unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  LaurentScalar power() {
    LaurentScalar base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer exponent");
    }
    long e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + (text_[pos_] - '0');
      if (e > 100000) fail("exponent too large");
      ++pos_;
    }
    if (negative && base.is_zero()) fail("negative power of zero");
    return base.pow(static_cast<int>(negative ? -e : e));
  }

  LaurentScalar primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of literal");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentScalar value = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    fail(std::string("unexpected '") + c + "'");
  }

  LaurentScalar number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    mpz_class n(std::string(text_.substr(start, pos_ - start)));
    BaseScalar c = BaseScalar::from_fraction(field_, n, 1);
    return LaurentScalar::from_base(c, names_.size());
  }

  // Longest tower name that is a prefix of the remaining text, so "t1t2"
  // reads as t1*t2.
  LaurentScalar name() {
    std::size_t best = names_.size();
    std::size_t best_len = 0;
    for (std::size_t k = 0; k < names_.size(); ++k) {
      const std::string& n = names_[k];
      if (n.size() > best_len && text_.substr(pos_, n.size()) == n) {
        best = k;
        best_len = n.size();
      }
    }
    if (best == names_.size()) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      fail("unknown indeterminate '" + std::string(text_.substr(pos_, end - pos_)) + "'");
    }
    if (pos_ + best_len < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + best_len]))) {
      std::size_t end = pos_ + best_len;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      fail("unknown indeterminate '" + std::string(text_.substr(pos_, end - pos_)) + "'");
    }
    pos_ += best_len;
    return LaurentScalar::variable(field_, names_.size(), best);
  }

  std::string_view text_;
  Field field_;
  const TowerNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentScalar parse_scalar(std::string_view text, Field field, const TowerNames& names) {
  return Parser(text, field, names).parse();
}

LaurentScalar parse_scalar(std::string_view text, Field field, std::size_t arity) {
  return parse_scalar(text, field, default_tower_names(arity));
}

}  // namespace quatinv
