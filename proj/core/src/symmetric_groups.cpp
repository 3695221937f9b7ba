#include "heis/symmetric_groups.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace heis {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int x : img_) {
    if (x < 1 || x > n() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::transposition(int n, int a, int b) {
  Perm p = identity(n);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 1; i <= n(); ++i) v[img_[i - 1] - 1] = i;
  return Perm(std::move(v));
}

int Perm::sign() const {
  int s = 1;
  std::vector<bool> seen(img_.size() + 1, false);
  for (int i = 1; i <= n(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j - 1]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

Partition Perm::cycle_type() const {
  std::vector<int> lens;
  std::vector<bool> seen(img_.size() + 1, false);
  for (int i = 1; i <= n(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j - 1]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(std::move(lens));
}

std::string Perm::str() const {
  std::string s;
  std::vector<bool> seen(img_.size() + 1, false);
  for (int i = 1; i <= n(); ++i) {
    if (seen[i] || img_[i - 1] == i) continue;
    s += "(";
    for (int j = i; !seen[j]; j = img_[j - 1]) {
      seen[j] = true;
      if (j != i) s += " ";
      s += std::to_string(j);
    }
    s += ")";
  }
  return s.empty() ? "id" : s;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> v(a.img_.size());
  for (int i = 1; i <= a.n(); ++i) v[i - 1] = a(b(i));
  return Perm(std::move(v));
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

GroupAlgElem GroupAlgElem::basis(const Perm& g, const Rational& c) {
  GroupAlgElem e(g.n());
  e.add(g, c);
  return e;
}

Rational GroupAlgElem::coeff(const Perm& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgElem::add(const Perm& g, const Rational& c) {
  if (g.n() != n_) throw std::invalid_argument("group algebra element of mismatched degree");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(g, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgElem& GroupAlgElem::operator+=(const GroupAlgElem& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

GroupAlgElem& GroupAlgElem::operator-=(const GroupAlgElem& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

GroupAlgElem GroupAlgElem::scaled(const Rational& c) const {
  GroupAlgElem r(n_);
  for (const auto& [g, k] : terms_) r.add(g, k * c);
  return r;
}

GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("multiplying group algebra elements of different degree");
  GroupAlgElem r(a.n_);
  for (const auto& [g, c] : a.terms_)
    for (const auto& [h, d] : b.terms_) r.add(g * h, c * d);
  return r;
}

std::string GroupAlgElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    Rational mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    out += g.str();
  }
  return out;
}

Tableau Tableau::canonical(const Partition& shape) {
  Tableau t{shape, {}};
  int k = 1;
  for (int len : shape.parts()) {
    std::vector<int> row;
    for (int j = 0; j < len; ++j) row.push_back(k++);
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

// Sum over the product of the symmetric groups on the given blocks, weighted by sign if asked.
GroupAlgElem block_sum(int n, const std::vector<std::vector<int>>& blocks, bool signed_sum) {
  GroupAlgElem acc = GroupAlgElem::basis(Perm::identity(n));
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    GroupAlgElem part(n);
    std::vector<int> img = block;
    std::sort(img.begin(), img.end());
    do {
      std::vector<int> v(n);
      std::iota(v.begin(), v.end(), 1);
      for (size_t i = 0; i < block.size(); ++i) v[block[i] - 1] = img[i];
      Perm g(std::move(v));
      part.add(g, signed_sum ? g.sign() : 1);
    } while (std::next_permutation(img.begin(), img.end()));
    acc = acc * part;
  }
  return acc;
}

}  // namespace

GroupAlgElem row_symmetrizer(const Partition& lambda) {
  Tableau t = Tableau::canonical(lambda);
  return block_sum(lambda.size(), t.rows, false);
}

GroupAlgElem column_antisymmetrizer(const Partition& lambda) {
  Tableau t = Tableau::canonical(lambda);
  std::vector<std::vector<int>> cols;
  for (int c = 0; !lambda.empty() && c < lambda.parts()[0]; ++c) {
    std::vector<int> col;
    for (const auto& row : t.rows)
      if (c < static_cast<int>(row.size())) col.push_back(row[c]);
    cols.push_back(std::move(col));
  }
  return block_sum(lambda.size(), cols, true);
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

GroupAlgElem young_symmetrizer(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("young_symmetrizer: empty partition");
  const Integer n_lambda = factorial(lambda.size()) / dim_hook(lambda);
  return (row_symmetrizer(lambda) * column_antisymmetrizer(lambda)).scaled(Rational(1, 1) / Rational(n_lambda));
}

Integer dim_hook(const Partition& lambda) {
  const Partition tr = lambda.transpose();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j) hooks *= (lambda.part(i) - j - 1) + (tr.part(j) - i - 1) + 1;
  return factorial(lambda.size()) / hooks;
}

Integer kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("kostka: sizes differ");
  // Count chains of horizontal strips of sizes mu_1, mu_2, ... ending at lambda.
  std::map<Partition, Integer> layer{{Partition(), 1}};
  for (int m : mu.parts()) {
    std::map<Partition, Integer> next;
    for (const auto& [p, c] : layer)
      for (const auto& q : strip_add(p, m, Strip::Horizontal))
        if (lambda.contains(q)) next[q] += c;
    layer = std::move(next);
  }
  auto it = layer.find(lambda);
  return it == layer.end() ? Integer(0) : it->second;
}

Report verify_idempotents(int n) {
  const std::string id = "idempotents(" + std::to_string(n) + ")";
  if (n < 1) throw std::invalid_argument("verify_idempotents: n must be positive");
  std::vector<std::string> bad;
  auto shapes = partitions_of(n);
  for (const auto& lam : shapes) {
    GroupAlgElem e = young_symmetrizer(lam);
    GroupAlgElem diff = e * e - e;
    if (!diff.is_zero()) bad.push_back(lam.str() + ": " + diff.str());
  }
  const std::string value = std::to_string(shapes.size()) + " shapes";
  return bad.empty() ? Report::ok(id, value) : Report::fail(id, bad, value);
}

Report verify_regular_dim(int n) {
  const std::string id = "regular-dim(" + std::to_string(n) + ")";
  if (n < 1) throw std::invalid_argument("verify_regular_dim: n must be positive");
  std::vector<std::string> bad;
  auto shapes = partitions_of(n);
  Integer sum = 0;
  for (const auto& lam : shapes) sum += dim_hook(lam) * dim_hook(lam);
  if (sum != factorial(n)) bad.push_back("sum of squared dimensions " + sum.get_str() + " != " + factorial(n).get_str());
  for (const auto& lam : shapes)
    for (const auto& mu : shapes) {
      Integer k = kostka(lam, mu);
      if (lam == mu && k != 1) bad.push_back("K" + lam.str() + lam.str() + " = " + k.get_str());
      if (lam != mu && k != 0 && !lam.dominates(mu))
        bad.push_back("K" + lam.str() + mu.str() + " = " + k.get_str() + " without dominance");
    }
  return bad.empty() ? Report::ok(id, sum.get_str()) : Report::fail(id, bad, sum.get_str());
}

}  // namespace heis
