#pragma once

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

// Arithmetic on numbers and "pi": "pi/6", "-pi/4", "3pi/16", "2*pi/3", "(1+pi)/2", "0.5".
// A number directly followed by "pi" or "(" multiplies.
namespace fosc_cli {

class AngleParser {
 public:
  explicit AngleParser(std::string text) : s_(std::move(text)) {}

  double parse() {
    const double v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + s_.substr(pos_) + "'");
    if (!std::isfinite(v)) error("value is not finite");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw std::invalid_argument("bad angle \"" + s_ + "\": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_pi() {
    skip();
    return s_.compare(pos_, 2, "pi") == 0;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  double term() {
    double v = unary();
    for (;;) {
      if (eat('*')) v *= unary();
      else if (eat('/')) v /= unary();
      else if (at_pi() || (skip(), pos_ < s_.size() && s_[pos_] == '(')) v *= primary();
      else return v;
    }
  }
  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }
  double primary() {
    skip();
    if (at_pi()) {
      pos_ += 2;
      return std::numbers::pi;
    }
    if (eat('(')) {
      const double v = expr();
      if (!eat(')')) error("missing ')'");
      return v;
    }
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) error(pos_ < s_.size() ? "expected a number at '" + s_.substr(pos_) + "'" : "unexpected end");
    // strtod also accepts "inf", "nan" and hex floats; keep to plain decimals.
    for (const char* p = begin; p != end; ++p)
      if (!(std::isdigit(static_cast<unsigned char>(*p)) || *p == '.' || *p == 'e' || *p == 'E' || *p == '+' ||
            *p == '-'))
        error("unsupported number syntax");
    pos_ += std::size_t(end - begin);
    return v;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

inline double parse_angle(const std::string& text) { return AngleParser(text).parse(); }

}  // namespace fosc_cli
