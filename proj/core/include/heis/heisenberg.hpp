#pragma once

#include "heis/scalars.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace heis {

enum class Kind : unsigned char { P, Q };

struct Letter {
  Kind kind;
  int index;  // >= 1
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

bool is_normal_word(const Word& w);

// Element of the free algebra on p_n, q_n over Z[t, 1/t].
class NCPoly {
 public:
  using Terms = std::map<Word, LaurentPoly>;

  NCPoly() = default;
  NCPoly(const LaurentPoly& c);  // NOLINT: scalar multiple of the empty word
  static NCPoly word(const Word& w, const LaurentPoly& c = LaurentPoly(1L));
  // p_n / q_n with p_0 = q_0 = 1 and negative indices giving zero.
  static NCPoly gen(Kind k, int index);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_normal() const;
  LaurentPoly coeff(const Word& w) const;

  void add(const Word& w, const LaurentPoly& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const NCPoly& o);
  NCPoly operator-() const;
  NCPoly scaled(const LaurentPoly& c) const;

  std::string str() const;

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const NCPoly& b) { return a *= b; }
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

std::string word_str(const Word& w);

enum class NCOp { Add, Mul, Scale };
NCPoly nc_arith(NCOp op, const NCPoly& x, const NCPoly& y);
NCPoly nc_arith(NCOp op, const NCPoly& x, const LaurentPoly& c);

// Which redex the rewriter picks first. Both give the same result.
enum class RedexOrder { Leftmost, Rightmost };

NCPoly normal_order(const NCPoly& x, bool deformed, RedexOrder order = RedexOrder::Leftmost);
NCPoly commutator(const NCPoly& x, const NCPoly& y, bool deformed);
NCPoly specialize_t(const NCPoly& x, long value);

// a_n in q letters (n > 0) or p letters (n < 0).
NCPoly a_as_pq(int n);
// Coefficients of the inverse series of 1 + sum (-1)^m p_m z^m, in p letters.
NCPoly tilde_p_as_p(int m);

struct Report;
Report verify_a_commutator(int n, int m);
Report verify_tilde_relation(int n, int m);

}  // namespace heis
