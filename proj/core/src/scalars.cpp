#include "heis/scalars.hpp"

#include <cctype>

namespace heis {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exp) {
  LaurentPoly p;
  p.add_term(exp, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Integer LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

void LaurentPoly::add_term(int exp, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(r.terms_);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r(1L), b = *this;
  while (n) {
    if (n & 1u) r *= b;
    b *= b;
    n >>= 1u;
  }
  return r;
}

Integer LaurentPoly::eval(const Integer& value) const {
  if (value == 0) {
    if (!terms_.empty() && terms_.begin()->first < 0)
      throw std::domain_error("cannot substitute t := 0 into a negative power of t");
    return coeff(0);
  }
  Integer num = 0;
  int lo = terms_.empty() ? 0 : std::min(0, terms_.begin()->first);
  // Evaluate t^(-lo) * p(t) as an integer, then divide back.
  for (const auto& [e, c] : terms_) {
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(e - lo));
    num += c * pw;
  }
  if (lo == 0) return num;
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(-lo));
  if (num % den != 0) throw std::domain_error("substitution does not give an integer");
  return num / den;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  LaurentPoly rem = *this, q;
  const int dhi = d.max_exp();
  const Integer& dlead = d.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    if (rem.max_exp() - dhi < rem.min_exp() - d.min_exp())
      throw std::domain_error("polynomial division is not exact");
    const Integer& rlead = rem.terms_.rbegin()->second;
    if (rlead % dlead != 0) throw std::domain_error("polynomial division is not exact");
    LaurentPoly step = monomial(rlead / dlead, rem.max_exp() - dhi);
    q += step;
    rem -= step * d;
  }
  return q;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

struct PolyLexer {
  std::string_view s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  Integer number() {
    skip();
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("expected a number at position " + std::to_string(i));
    Integer z(std::string(s.substr(i, j - i)));
    i = j;
    return z;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("bad polynomial '" + std::string(s) + "': " + what);
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view s) {
  PolyLexer lx{s};
  LaurentPoly out;
  bool first = true;
  while (true) {
    lx.skip();
    if (lx.i >= s.size()) break;
    int sign = 1;
    if (lx.eat('+')) {
    } else if (lx.eat('-')) {
      sign = -1;
    } else if (!first) {
      lx.fail("expected '+' or '-'");
    }
    first = false;
    Integer c = 1;
    bool have_num = false;
    if (lx.at_digit()) {
      c = lx.number();
      have_num = true;
      lx.eat('*');
    }
    int e = 0;
    if (lx.eat('t')) {
      e = 1;
      if (lx.eat('^')) {
        int esign = lx.eat('-') ? -1 : 1;
        if (!lx.at_digit()) lx.fail("expected exponent");
        e = esign * static_cast<int>(lx.number().get_si());
      }
    } else if (!have_num) {
      lx.fail("expected a term");
    }
    out.add_term(e, sign * c);
  }
  if (first) lx.fail("empty input");
  return out;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first <=> ib->first;
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c <=> 0;
  }
  if (ia != a.terms_.end()) return std::strong_ordering::greater;
  if (ib != b.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

LaurentPoly qint(int k) {
  if (k < 0) throw std::invalid_argument("qint: negative argument " + std::to_string(k));
  LaurentPoly r;
  for (int i = 0; i < k; ++i) r += LaurentPoly::monomial(1, i);
  return r;
}

ExtScalar ext_mul(const ExtScalar& a, const ExtScalar& b) {
  return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0};
}

Rational ext_trace(const ExtScalar& a) { return a.c1; }

}  // namespace heis
