#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace heis {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

// Integer-coefficient Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const Integer& c);  // NOLINT

  static LaurentPoly monomial(const Integer& c, int exp);
  static LaurentPoly t() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Integer coeff(int exp) const;
  int min_exp() const;  // pre: nonzero
  int max_exp() const;  // pre: nonzero

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  LaurentPoly pow(unsigned n) const;

  // Substitute t := value. Throws std::domain_error on a negative exponent when value is 0.
  Integer eval(const Integer& value) const;
  // Exact division; throws std::domain_error if the divisor does not divide.
  LaurentPoly exact_div(const LaurentPoly& d) const;

  std::string str() const;
  static LaurentPoly parse(std::string_view s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void add_term(int exp, const Integer& c);
  Terms terms_;
};

// [k] = 1 + t + ... + t^(k-1).
LaurentPoly qint(int k);

// Element c0 + c1*v of the exterior algebra on one odd generator v.
struct ExtScalar {
  Rational c0;
  Rational c1;
  friend bool operator==(const ExtScalar&, const ExtScalar&) = default;
};

ExtScalar ext_mul(const ExtScalar& a, const ExtScalar& b);
Rational ext_trace(const ExtScalar& a);

}  // namespace heis
