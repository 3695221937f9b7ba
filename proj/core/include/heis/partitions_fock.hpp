#pragma once

#include "heis/heisenberg.hpp"
#include "heis/scalars.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heis {

class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based, 0 past the end
  Partition transpose() const;
  bool contains(const Partition& mu) const;
  // Dominance order on partitions of the same size.
  bool dominates(const Partition& mu) const;

  std::string str() const;  // "[3,1,1]", "[]" for the empty partition
  static Partition parse(std::string_view s);

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Reverse-lexicographic: [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
std::vector<Partition> partitions_of(int n);
// All partitions of size 0..n, grouped by size.
std::vector<Partition> partitions_up_to(int n);

enum class Strip { Horizontal, Vertical };

std::vector<Partition> strip_add(const Partition& lambda, int k, Strip kind);
std::vector<Partition> strip_remove(const Partition& lambda, int k, Strip kind);

class FockElem {
 public:
  using Terms = std::map<Partition, LaurentPoly>;

  FockElem() = default;
  explicit FockElem(const Partition& p, const LaurentPoly& c = LaurentPoly(1L));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Partition& p) const;
  void add(const Partition& p, const LaurentPoly& c);
  FockElem& operator+=(const FockElem& o);
  FockElem& operator-=(const FockElem& o);
  FockElem scaled(const LaurentPoly& c) const;

  std::string str() const;  // "(1 + t)*[2,1] + [3]"

  friend FockElem operator+(FockElem a, const FockElem& b) { return a += b; }
  friend FockElem operator-(FockElem a, const FockElem& b) { return a -= b; }
  friend bool operator==(const FockElem&, const FockElem&) = default;

 private:
  Terms terms_;
};

FockElem act_p(int m, const FockElem& x);
FockElem act_tilde_p(int m, const FockElem& x);
std::pair<FockElem, FockElem> act_q_split(const FockElem& x);
FockElem act_q(int n, const FockElem& x);
// Letters act right to left: p*q means q first.
FockElem apply_ncpoly(const NCPoly& x, const FockElem& v);

}  // namespace heis
