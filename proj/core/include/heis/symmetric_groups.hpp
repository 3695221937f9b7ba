#pragma once

#include "heis/partitions_fock.hpp"
#include "heis/report.hpp"
#include "heis/scalars.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace heis {

// Permutation of {1..n}, stored as its image list.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);  // throws unless a bijection of 1..n
  static Perm identity(int n);
  static Perm transposition(int n, int a, int b);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }
  Perm inverse() const;
  int sign() const;
  Partition cycle_type() const;
  std::string str() const;  // cycle notation, "id" for the identity

  // (a * b)(i) = a(b(i))
  friend Perm operator*(const Perm& a, const Perm& b);
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

std::vector<Perm> all_perms(int n);

class GroupAlgElem {
 public:
  using Terms = std::map<Perm, Rational>;

  explicit GroupAlgElem(int n = 1) : n_(n) {}
  static GroupAlgElem basis(const Perm& g, const Rational& c = 1);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Perm& g) const;
  void add(const Perm& g, const Rational& c);

  GroupAlgElem& operator+=(const GroupAlgElem& o);
  GroupAlgElem& operator-=(const GroupAlgElem& o);
  GroupAlgElem scaled(const Rational& c) const;
  std::string str() const;

  friend GroupAlgElem operator+(GroupAlgElem a, const GroupAlgElem& b) { return a += b; }
  friend GroupAlgElem operator-(GroupAlgElem a, const GroupAlgElem& b) { return a -= b; }
  friend GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b);
  friend bool operator==(const GroupAlgElem&, const GroupAlgElem&) = default;

 private:
  int n_;
  Terms terms_;
};

// Rows filled left to right, top to bottom with 1..n.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;
  static Tableau canonical(const Partition& shape);
};

GroupAlgElem row_symmetrizer(const Partition& lambda);
GroupAlgElem column_antisymmetrizer(const Partition& lambda);
GroupAlgElem young_symmetrizer(const Partition& lambda);

Integer factorial(int n);
Integer dim_hook(const Partition& lambda);
Integer kostka(const Partition& lambda, const Partition& mu);

Report verify_idempotents(int n);
Report verify_regular_dim(int n);

}  // namespace heis
