#include "heis/cli.hpp"

#include <cctype>
#include <climits>

namespace heis::cli {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NCPoly parse() {
    NCPoly x = expr();
    skip();
    if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return x;
  }

 private:
  const std::string& s_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at column " + std::to_string(i_ + 1) + ": " + what, i_);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'p' || c == 'q' || c == 'a' || c == 't';
  }

  int integer() {
    const size_t start = i_;
    long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      if (v > INT_MAX) fail("integer too large");
      ++i_;
    }
    if (i_ == start) fail("expected an integer");
    return static_cast<int>(v);
  }

  NCPoly expr() {
    NCPoly x = term();
    for (;;) {
      if (peek('+')) {
        ++i_;
        x += term();
      } else if (peek('-')) {
        ++i_;
        x -= term();
      } else {
        return x;
      }
    }
  }

  NCPoly term() {
    NCPoly x = unary();
    for (;;) {
      if (peek('*')) {
        ++i_;
        x *= unary();
      } else if (starts_factor()) {
        x *= unary();
      } else {
        return x;
      }
    }
  }

  NCPoly unary() {
    if (peek('-')) {
      ++i_;
      return -unary();
    }
    return power();
  }

  NCPoly power() {
    skip();
    const size_t base_pos = i_;
    NCPoly base = atom();
    if (!peek('^')) return base;
    ++i_;
    skip();
    bool neg = false;
    if (i_ < s_.size() && s_[i_] == '-') {
      neg = true;
      ++i_;
    }
    const int e = integer();
    if (neg) {
      // Only powers of t may be inverted.
      if (base.terms().size() != 1 || !base.terms().begin()->first.empty() ||
          base.terms().begin()->second.terms().size() != 1 ||
          abs(base.terms().begin()->second.terms().begin()->second) != 1) {
        i_ = base_pos;
        fail("negative exponent on a non-invertible factor");
      }
      const auto& [exp, c] = *base.terms().begin()->second.terms().begin();
      return NCPoly(LaurentPoly::monomial(e % 2 ? Integer(c) : Integer(1), -exp * e));
    }
    NCPoly r(LaurentPoly(1L));
    for (int k = 0; k < e; ++k) r *= base;
    return r;
  }

  NCPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) return NCPoly(LaurentPoly(Integer(integer())));
    if (c == '(') {
      ++i_;
      NCPoly x = expr();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return x;
    }
    const size_t start = i_;
    if (c == 't' && i_ + 1 < s_.size() && s_[i_ + 1] == 'p') {
      i_ += 2;
      return tilde_p_as_p(integer());
    }
    if (c == 't') {
      ++i_;
      return NCPoly(LaurentPoly::t());
    }
    if (c == 'p' || c == 'q') {
      ++i_;
      return NCPoly::gen(c == 'p' ? Kind::P : Kind::Q, integer());
    }
    if (c == 'a') {
      ++i_;
      const bool neg = i_ < s_.size() && s_[i_] == '-';
      if (neg) ++i_;
      const int k = integer();
      if (k == 0) {
        i_ = start;
        fail("a0 is not a generator");
      }
      return a_as_pq(neg ? -k : k);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

NCPoly parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string describe(const ParseError& e, const std::string& text) {
  return std::string(e.what()) + "\n  " + text + "\n  " + std::string(e.position, ' ') + "^";
}

}  // namespace heis::cli
