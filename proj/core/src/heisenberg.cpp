#include "heis/heisenberg.hpp"

#include "heis/report.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace heis {

bool is_normal_word(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    const Letter& a = w[i];
    const Letter& b = w[i + 1];
    if (a.kind == Kind::Q && b.kind == Kind::P) return false;
    if (a.kind == b.kind && a.index < b.index) return false;
  }
  return true;
}

NCPoly::NCPoly(const LaurentPoly& c) {
  if (!c.is_zero()) terms_.emplace(Word{}, c);
}

NCPoly NCPoly::word(const Word& w, const LaurentPoly& c) {
  NCPoly r;
  r.add(w, c);
  return r;
}

NCPoly NCPoly::gen(Kind k, int index) {
  if (index < 0) return {};
  if (index == 0) return NCPoly(LaurentPoly(1L));
  return word({Letter{k, index}});
}

bool NCPoly::is_normal() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return is_normal_word(kv.first); });
}

LaurentPoly NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void NCPoly::add(const Word& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const NCPoly& o) {
  NCPoly r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add(w, c1 * c2);
    }
  terms_ = std::move(r.terms_);
  return *this;
}

NCPoly NCPoly::operator-() const { return scaled(LaurentPoly(-1L)); }

NCPoly NCPoly::scaled(const LaurentPoly& c) const {
  NCPoly r;
  for (const auto& [w, k] : terms_) r.add(w, k * c);
  return r;
}

std::string word_str(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += (w[i].kind == Kind::P ? "p" : "q") + std::to_string(w[i].index);
  }
  return s;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    LaurentPoly mag = c;
    bool neg = false;
    if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
      neg = true;
      mag = -c;
    }
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (w.empty()) {
      out += mag.str();
    } else if (mag == LaurentPoly(1L)) {
      out += word_str(w);
    } else if (mag.terms().size() == 1) {
      out += mag.str() + "*" + word_str(w);
    } else {
      out += "(" + mag.str() + ")*" + word_str(w);
    }
  }
  return out;
}

NCPoly nc_arith(NCOp op, const NCPoly& x, const NCPoly& y) {
  switch (op) {
    case NCOp::Add: return x + y;
    case NCOp::Mul: return x * y;
    case NCOp::Scale: break;
  }
  throw std::invalid_argument("nc_arith: scale takes a scalar");
}

NCPoly nc_arith(NCOp op, const NCPoly& x, const LaurentPoly& c) {
  if (op != NCOp::Scale) return nc_arith(op, x, NCPoly(c));
  return x.scaled(c);
}

namespace {

// Position of the redex to rewrite, or -1 if the word is normal.
long find_redex(const Word& w, RedexOrder order) {
  const long n = static_cast<long>(w.size());
  auto is_redex = [&](long i) {
    const Letter& a = w[i];
    const Letter& b = w[i + 1];
    return (a.kind == Kind::Q && b.kind == Kind::P) || (a.kind == b.kind && a.index < b.index);
  };
  if (order == RedexOrder::Leftmost) {
    for (long i = 0; i + 1 < n; ++i)
      if (is_redex(i)) return i;
  } else {
    for (long i = n - 2; i >= 0; --i)
      if (is_redex(i)) return i;
  }
  return -1;
}

}  // namespace

NCPoly normal_order(const NCPoly& x, bool deformed, RedexOrder order) {
  std::map<Word, LaurentPoly> pending(x.terms().begin(), x.terms().end());
  NCPoly out;
  auto push = [&](Word w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = pending.emplace(std::move(w), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const LaurentPoly& c = node.mapped();
    long i = find_redex(w, order);
    if (i < 0) {
      out.add(w, c);
      continue;
    }
    const Letter a = w[i], b = w[i + 1];
    if (a.kind == b.kind) {
      Word v = w;
      std::swap(v[i], v[i + 1]);
      push(std::move(v), c);
      continue;
    }
    // q_n p_m = sum_k c_k p_{m-k} q_{n-k}
    const int n = a.index, m = b.index;
    for (int k = 0; k <= std::min(n, m); ++k) {
      Word v(w.begin(), w.begin() + i);
      if (m - k > 0) v.push_back({Kind::P, m - k});
      if (n - k > 0) v.push_back({Kind::Q, n - k});
      v.insert(v.end(), w.begin() + i + 2, w.end());
      push(std::move(v), deformed ? c * qint(k + 1) : c);
    }
  }
  return out;
}

NCPoly commutator(const NCPoly& x, const NCPoly& y, bool deformed) {
  return normal_order(x * y - y * x, deformed);
}

NCPoly specialize_t(const NCPoly& x, long value) {
  NCPoly r;
  for (const auto& [w, c] : x.terms()) r.add(w, LaurentPoly(c.eval(Integer(value))));
  return r;
}

namespace {

// Shared Newton-type recursion: a_m = m g_m - sum_{i<m} a_i g_{m-i}.
NCPoly newton(Kind k, int m, std::vector<NCPoly>& memo) {
  while (static_cast<int>(memo.size()) <= m) {
    const int j = static_cast<int>(memo.size());
    if (j == 0) {
      memo.emplace_back();
      continue;
    }
    NCPoly a = NCPoly::gen(k, j).scaled(LaurentPoly(static_cast<long>(j)));
    for (int i = 1; i < j; ++i) a -= memo[i] * NCPoly::gen(k, j - i);
    memo.push_back(normal_order(a, false));
  }
  return memo[m];
}

std::mutex g_series_mutex;

}  // namespace

NCPoly a_as_pq(int n) {
  if (n == 0) throw std::invalid_argument("a_as_pq: index must be nonzero");
  static std::vector<NCPoly> memo_q, memo_p;
  std::lock_guard lock(g_series_mutex);
  return n > 0 ? newton(Kind::Q, n, memo_q) : newton(Kind::P, -n, memo_p);
}

NCPoly tilde_p_as_p(int m) {
  if (m < 0) throw std::invalid_argument("tilde_p_as_p: index must be nonnegative");
  static std::vector<NCPoly> memo{NCPoly(LaurentPoly(1L))};
  std::lock_guard lock(g_series_mutex);
  while (static_cast<int>(memo.size()) <= m) {
    const int j = static_cast<int>(memo.size());
    NCPoly r;
    for (int k = 1; k <= j; ++k) {
      NCPoly term = NCPoly::gen(Kind::P, k) * memo[j - k];
      r -= (k % 2 == 0) ? term : -term;
    }
    memo.push_back(normal_order(r, false));
  }
  return memo[m];
}

namespace {

std::vector<std::string> residual(const NCPoly& diff) {
  std::vector<std::string> out;
  for (auto it = diff.terms().rbegin(); it != diff.terms().rend(); ++it)
    out.push_back(NCPoly::word(it->first, it->second).str());
  return out;
}

}  // namespace

Report verify_a_commutator(int n, int m) {
  const std::string id = "a-commutator(" + std::to_string(n) + "," + std::to_string(m) + ")";
  if (n == 0 || m == 0) throw std::invalid_argument("verify_a_commutator: indices must be nonzero");
  const NCPoly an = a_as_pq(n), am = a_as_pq(m);
  const NCPoly got = commutator(an, am, true);
  NCPoly expect;
  if (n + m == 0) {
    const LaurentPoly tn = LaurentPoly::monomial(1, std::abs(n));
    expect = NCPoly(LaurentPoly(static_cast<long>(n)) * (LaurentPoly(1L) + tn));
  }
  NCPoly diff = got - expect;
  // At t = 0 the deformed bracket must collapse to the classical one, n * delta.
  NCPoly classical = commutator(an, am, false);
  NCPoly expect0 = n + m == 0 ? NCPoly(LaurentPoly(static_cast<long>(n))) : NCPoly();
  NCPoly diff0 = specialize_t(got, 0) - expect0;
  diff0 += classical - expect0;
  if (diff.is_zero() && diff0.is_zero()) return Report::ok(id, got.str());
  auto res = residual(diff);
  for (auto& s : residual(diff0)) res.push_back("t=0: " + s);
  return Report::fail(id, res, got.str());
}

Report verify_tilde_relation(int n, int m) {
  const std::string id = "tilde-relation(" + std::to_string(n) + "," + std::to_string(m) + ")";
  if (n < 1 || m < 1) throw std::invalid_argument("verify_tilde_relation: indices must be positive");
  const NCPoly qn = NCPoly::gen(Kind::Q, n), qn1 = NCPoly::gen(Kind::Q, n - 1);
  const NCPoly tm = tilde_p_as_p(m), tm1 = tilde_p_as_p(m - 1);
  NCPoly lhs = normal_order(qn * tm, false);
  NCPoly rhs = normal_order(tm * qn + tm1 * qn1, false);
  NCPoly diff = lhs - rhs;
  // Tilde generators commute among themselves.
  const NCPoly tn = tilde_p_as_p(n);
  diff += normal_order(tn * tm - tm * tn, false);
  if (diff.is_zero()) return Report::ok(id, lhs.str());
  return Report::fail(id, residual(diff), lhs.str());
}

}  // namespace heis
