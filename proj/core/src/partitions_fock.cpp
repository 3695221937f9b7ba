#include "heis/partitions_fock.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace heis {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int c = 1; !parts_.empty() && c <= parts_[0]; ++c) {
    int h = 0;
    while (h < length() && parts_[h] >= c) ++h;
    t.push_back(h);
  }
  return Partition(std::move(t));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

bool Partition::dominates(const Partition& mu) const {
  int a = 0, b = 0;
  for (int i = 0; i < std::max(length(), mu.length()); ++i) {
    a += part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition Partition::parse(std::string_view s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "\xE2\x88\x85" || t == "[]" || t == "()") return Partition();
  if (t.size() < 2 || !((t.front() == '[' && t.back() == ']') || (t.front() == '(' && t.back() == ')')))
    throw std::invalid_argument("bad partition literal '" + std::string(s) + "'");
  std::vector<int> parts;
  size_t i = 1;
  while (i + 1 < t.size()) {
    size_t j = i;
    while (j + 1 < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    if (j == i) throw std::invalid_argument("bad partition literal '" + std::string(s) + "'");
    parts.push_back(std::stoi(t.substr(i, j - i)));
    i = j;
    if (i + 1 < t.size()) {
      if (t[i] != ',') throw std::invalid_argument("bad partition literal '" + std::string(s) + "'");
      ++i;
    }
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

namespace {

std::vector<Partition> hstrip_add(const Partition& lam, int k) {
  std::vector<Partition> out;
  const int rows = lam.length() + 1;
  std::vector<int> mu(rows);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rows) {
      if (left == 0) {
        std::vector<int> parts;
        for (int x : mu)
          if (x > 0) parts.push_back(x);
        out.emplace_back(std::move(parts));
      }
      return;
    }
    const int cap = i == 0 ? left : std::min(left, lam.part(i - 1) - lam.part(i));
    for (int a = cap; a >= 0; --a) {
      mu[i] = lam.part(i) + a;
      rec(i + 1, left - a);
    }
  };
  rec(0, k);
  return out;
}

std::vector<Partition> hstrip_remove(const Partition& lam, int k) {
  std::vector<Partition> out;
  const int rows = lam.length();
  std::vector<int> mu(rows);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rows) {
      if (left == 0) {
        std::vector<int> parts;
        for (int x : mu)
          if (x > 0) parts.push_back(x);
        out.emplace_back(std::move(parts));
      }
      return;
    }
    const int cap = std::min(left, lam.part(i) - lam.part(i + 1));
    for (int r = 0; r <= cap; ++r) {
      mu[i] = lam.part(i) - r;
      rec(i + 1, left - r);
    }
  };
  rec(0, k);
  return out;
}

std::vector<Partition> sorted_desc(std::vector<Partition> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::vector<Partition> transposed(const std::vector<Partition>& v) {
  std::vector<Partition> out;
  for (const auto& p : v) out.push_back(p.transpose());
  return out;
}

}  // namespace

std::vector<Partition> strip_add(const Partition& lambda, int k, Strip kind) {
  if (k < 0) throw std::invalid_argument("strip_add: negative strip size");
  if (kind == Strip::Horizontal) return sorted_desc(hstrip_add(lambda, k));
  return sorted_desc(transposed(hstrip_add(lambda.transpose(), k)));
}

std::vector<Partition> strip_remove(const Partition& lambda, int k, Strip kind) {
  if (k < 0) throw std::invalid_argument("strip_remove: negative strip size");
  if (kind == Strip::Horizontal) return sorted_desc(hstrip_remove(lambda, k));
  return sorted_desc(transposed(hstrip_remove(lambda.transpose(), k)));
}

FockElem::FockElem(const Partition& p, const LaurentPoly& c) { add(p, c); }

LaurentPoly FockElem::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockElem::add(const Partition& p, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockElem& FockElem::operator+=(const FockElem& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

FockElem& FockElem::operator-=(const FockElem& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

FockElem FockElem::scaled(const LaurentPoly& c) const {
  FockElem r;
  for (const auto& [p, k] : terms_) r.add(p, k * c);
  return r;
}

std::string FockElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    LaurentPoly mag = c;
    bool neg = c.is_constant() && c.coeff(0) < 0;
    if (neg) mag = -c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (mag == LaurentPoly(1L))
      out += p.str();
    else if (mag.is_constant())
      out += mag.str() + "*" + p.str();
    else
      out += "(" + mag.str() + ")*" + p.str();
  }
  return out;
}

namespace {

template <class F>
FockElem linear(const FockElem& x, F&& on_basis) {
  FockElem r;
  for (const auto& [lam, c] : x.terms()) r += on_basis(lam).scaled(c);
  return r;
}

}  // namespace

FockElem act_p(int m, const FockElem& x) {
  if (m < 0) throw std::invalid_argument("act_p: negative index");
  return linear(x, [m](const Partition& lam) {
    FockElem r;
    for (const auto& mu : strip_add(lam, m, Strip::Horizontal)) r.add(mu, 1L);
    return r;
  });
}

FockElem act_tilde_p(int m, const FockElem& x) {
  if (m < 0) throw std::invalid_argument("act_tilde_p: negative index");
  return linear(x, [m](const Partition& lam) {
    FockElem r;
    for (const auto& mu : strip_add(lam, m, Strip::Vertical)) r.add(mu, 1L);
    return r;
  });
}

std::pair<FockElem, FockElem> act_q_split(const FockElem& x) {
  FockElem q1 = linear(x, [](const Partition& lam) {
    FockElem r;
    for (const auto& mu : strip_remove(lam, 1, Strip::Horizontal)) r.add(mu, 1L);
    return r;
  });
  FockElem q2 = q1.scaled(LaurentPoly::t());
  return {q1, q2};
}

FockElem act_q(int n, const FockElem& x) {
  if (n < 0) throw std::invalid_argument("act_q: negative index");
  return linear(x, [n](const Partition& lam) {
    FockElem r;
    for (int j = 0; j <= n; ++j) {
      const LaurentPoly w = LaurentPoly::monomial(1, j);
      for (const auto& nu : strip_remove(lam, j, Strip::Horizontal))
        for (const auto& mu : strip_remove(nu, n - j, Strip::Horizontal)) r.add(mu, w);
    }
    return r;
  });
}

FockElem apply_ncpoly(const NCPoly& x, const FockElem& v) {
  FockElem out;
  for (const auto& [w, c] : x.terms()) {
    FockElem cur = v;
    for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it)
      cur = it->kind == Kind::P ? act_p(it->index, cur) : act_q(it->index, cur);
    out += cur.scaled(c);
  }
  return out;
}

}  // namespace heis
