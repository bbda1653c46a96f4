#include "jc/expr.hpp"

#include <cctype>

namespace jc {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  BiPoly run() {
    skip();
    if (i_ >= s_.size()) fail("empty expression");
    BiPoly p = sum();
    skip();
    if (i_ < s_.size()) fail(std::string("unexpected '") + s_[i_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("expression \"" + s_ + "\", column " + std::to_string(i_ + 1) + ": " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_atom() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' ||
           c == '(';
  }

  BiPoly sum() {
    BiPoly p;
    bool neg = false;
    if (peek('+') || peek('-')) neg = s_[i_++] == '-';
    p = product();
    if (neg) p = -p;
    while (peek('+') || peek('-')) {
      bool minus = s_[i_++] == '-';
      BiPoly q = product();
      p = minus ? p - q : p + q;
    }
    return p;
  }

  BiPoly product() {
    BiPoly p = power();
    for (;;) {
      if (peek('*')) {
        ++i_;
        p = p * power();
      } else if (peek('/')) {
        ++i_;
        BiPoly d = power();
        if (d.is_zero()) fail("division by zero");
        if (d.deg_x() > 0 || d.deg_y() > 0) fail("division by a non-constant");
        p = p * d.at_origin().inv();
      } else if (starts_atom()) {
        p = p * power();
      } else {
        return p;
      }
    }
  }

  BiPoly power() {
    BiPoly a = atom();
    if (peek('^')) {
      ++i_;
      skip();
      long e = integer();
      if (e > 10000) fail("exponent too large");
      a = a.pow(static_cast<unsigned>(e));
    }
    return a;
  }

  long integer() {
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      fail("expected a non-negative integer");
    long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      if (v > 100000000) fail("integer literal too large");
      v = 10 * v + (s_[i_++] - '0');
    }
    return v;
  }

  BiPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      BiPoly p = sum();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return p;
    }
    if (c == 'x' || c == 'y') {
      ++i_;
      return c == 'x' ? BiPoly::x() : BiPoly::y();
    }
    if (c == 'z') {
      ++i_;
      long n = integer();
      if (n < 1 || n > 1000) fail("root of unity order must be in 1..1000");
      return BiPoly(Scalar::zeta(static_cast<unsigned>(n)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return BiPoly(Scalar(mpq_class(s_.substr(start, i_ - start))));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  size_t i_ = 0;
};

}  // namespace

BiPoly parse_poly(const std::string& text) { return Parser(text).run(); }

Scalar parse_scalar(const std::string& text) {
  BiPoly p = parse_poly(text);
  if (p.deg_x() > 0 || p.deg_y() > 0)
    throw InputError("expression \"" + text + "\" must be a constant");
  return p.at_origin();
}

}  // namespace jc
