#include "heis/k0_harness.hpp"

#include "heis/symmetric_groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace heis {

const LaurentPoly& OpMatrix::at(const Partition& mu, const Partition& lambda) const {
  auto row = std::lower_bound(codomain.begin(), codomain.end(), mu, [](const Partition& a, const Partition& b) {
    return a.size() != b.size() ? a.size() < b.size() : a > b;
  });
  auto col = std::find(domain.begin(), domain.end(), lambda);
  if (row == codomain.end() || *row != mu || col == domain.end())
    throw std::out_of_range("OpMatrix::at: partition outside the basis");
  return entries[row - codomain.begin()][col - domain.begin()];
}

namespace {

enum class Op : unsigned char { P, Q, TildeP };

struct OpWord {
  LaurentPoly coef;
  std::vector<std::pair<Op, int>> letters;  // left to right, acting right to left
};

int headroom(const std::vector<std::pair<Op, int>>& letters) {
  int cur = 0, best = 0;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    cur += it->first == Op::Q ? -it->second : it->second;
    best = std::max(best, cur);
  }
  return best;
}

FockElem apply_word(const std::vector<std::pair<Op, int>>& letters, FockElem v) {
  for (auto it = letters.rbegin(); it != letters.rend() && !v.is_zero(); ++it) {
    switch (it->first) {
      case Op::P: v = act_p(it->second, v); break;
      case Op::Q: v = act_q(it->second, v); break;
      case Op::TildeP: v = act_tilde_p(it->second, v); break;
    }
  }
  return v;
}

FockElem apply_terms(const std::vector<OpWord>& terms, const Partition& lambda) {
  FockElem out;
  for (const auto& w : terms) out += apply_word(w.letters, FockElem(lambda)).scaled(w.coef);
  return out;
}

FockElem at_t_zero(const FockElem& x) {
  FockElem r;
  for (const auto& [p, c] : x.terms()) r.add(p, LaurentPoly(c.eval(0)));
  return r;
}

// Adds coef * (letters) to out, dropping index-0 letters and words with a negative index.
void push_word(std::vector<OpWord>& out, const LaurentPoly& coef, std::vector<std::pair<Op, int>> letters) {
  std::vector<std::pair<Op, int>> kept;
  for (const auto& l : letters) {
    if (l.second < 0) return;
    if (l.second > 0) kept.push_back(l);
  }
  out.push_back({coef, std::move(kept)});
}

std::vector<Partition> basis_up_to(int n) {
  if (n < 0) return {};
  return partitions_up_to(n);
}

}  // namespace

int raising_headroom(const NCPoly& expr) {
  int h = 0;
  for (const auto& [w, c] : expr.terms()) {
    std::vector<std::pair<Op, int>> letters;
    for (const auto& l : w) letters.emplace_back(l.kind == Kind::P ? Op::P : Op::Q, l.index);
    h = std::max(h, headroom(letters));
  }
  return h;
}

OpMatrix op_matrix(const NCPoly& expr, int size_bound) {
  if (size_bound < 0) throw std::invalid_argument("op_matrix: negative size bound");
  const int h = raising_headroom(expr);
  if (h > size_bound)
    throw BoundError("op_matrix: expression raises size by " + std::to_string(h) + ", needs size bound >= " +
                         std::to_string(h),
                     h);
  OpMatrix m;
  m.size_bound = size_bound;
  m.headroom = h;
  m.domain = basis_up_to(size_bound - h);
  m.codomain = basis_up_to(size_bound);
  std::map<Partition, size_t> row;
  for (size_t i = 0; i < m.codomain.size(); ++i) row[m.codomain[i]] = i;
  m.entries.assign(m.codomain.size(), std::vector<LaurentPoly>(m.domain.size()));
  for (size_t j = 0; j < m.domain.size(); ++j) {
    const FockElem image = apply_ncpoly(expr, FockElem(m.domain[j]));
    for (const auto& [mu, c] : image.terms()) m.entries[row.at(mu)][j] = c;
  }
  return m;
}

const char* variant_name(RelationVariant v) {
  switch (v) {
    case RelationVariant::Deformed: return "deformed";
    case RelationVariant::ClassicalH: return "classical-h";
    case RelationVariant::ClassicalE: return "classical-e";
  }
  return "?";
}

Report verify_relation_operators(int n, int m, RelationVariant variant, int size_bound) {
  const std::string id =
      "relation(" + std::to_string(n) + "," + std::to_string(m) + "," + variant_name(variant) + ")";
  if (n < 1 || m < 1) throw std::invalid_argument("verify_relation_operators: indices must be positive");
  std::vector<OpWord> lhs, rhs;
  if (variant == RelationVariant::ClassicalE) {
    push_word(lhs, 1L, {{Op::Q, n}, {Op::TildeP, m}});
    push_word(rhs, 1L, {{Op::TildeP, m}, {Op::Q, n}});
    push_word(rhs, 1L, {{Op::TildeP, m - 1}, {Op::Q, n - 1}});
  } else {
    push_word(lhs, 1L, {{Op::Q, n}, {Op::P, m}});
    for (int k = 0; k <= std::min(n, m); ++k) {
      const LaurentPoly c = variant == RelationVariant::Deformed ? qint(k + 1) : LaurentPoly(1L);
      push_word(rhs, c, {{Op::P, m - k}, {Op::Q, n - k}});
    }
  }
  int h = 0;
  for (const auto* side : {&lhs, &rhs})
    for (const auto& w : *side) h = std::max(h, headroom(w.letters));
  if (h > size_bound)
    throw BoundError(id + ": needs size bound >= " + std::to_string(h), h);
  const bool classical = variant != RelationVariant::Deformed;
  const std::string value = "domain sizes <= " + std::to_string(size_bound - h);
  for (const auto& lambda : basis_up_to(size_bound - h)) {
    FockElem l = apply_terms(lhs, lambda), r = apply_terms(rhs, lambda);
    if (classical) {
      l = at_t_zero(l);
      r = at_t_zero(r);
    }
    if (l != r) {
      const FockElem diff = l - r;
      const Partition& mu = diff.terms().begin()->first;
      return Report::fail(id,
                          {"entry (" + mu.str() + ", " + lambda.str() + "): lhs " + l.coeff(mu).str() + " vs rhs " +
                           r.coeff(mu).str()},
                          value);
    }
  }
  return Report::ok(id, value);
}

std::vector<Report> verify_fock_relations(int size_bound) {
  if (size_bound < 1) throw std::invalid_argument("verify_fock_relations: size bound must be positive");
  std::vector<std::string> comm, comm1, comm2, split, q2;
  const LaurentPoly one_plus_t = LaurentPoly(1L) + LaurentPoly::t();
  for (const auto& lambda : partitions_up_to(size_bound - 1)) {
    const FockElem v(lambda);
    const FockElem pv = act_p(1, v);
    const FockElem c = act_q(1, pv) - act_p(1, act_q(1, v));
    if (c != v.scaled(one_plus_t)) comm.push_back(lambda.str() + ": " + c.str());
    const auto [a1, a2] = act_q_split(pv);
    const auto [b1, b2] = act_q_split(v);
    const FockElem c1 = a1 - act_p(1, b1), c2 = a2 - act_p(1, b2);
    if (c1 != v) comm1.push_back(lambda.str() + ": " + c1.str());
    if (c2 != v.scaled(LaurentPoly::t())) comm2.push_back(lambda.str() + ": " + c2.str());
    if (b1 + b2 != act_q(1, v)) split.push_back(lambda.str());
    if (b2 != b1.scaled(LaurentPoly::t())) q2.push_back(lambda.str());
  }
  auto mk = [](const std::string& id, const std::vector<std::string>& bad) {
    return bad.empty() ? Report::ok(id) : Report::fail(id, bad);
  };
  return {mk("fock:QP-PQ", comm), mk("fock:Q1P-PQ1", comm1), mk("fock:Q2P-PQ2", comm2),
          mk("fock:Q=Q1+Q2", split), mk("fock:Q2=tQ1", q2)};
}

NCPoly jacobi_trudi(const Partition& lambda) {
  const int l = lambda.length();
  if (l == 0) return NCPoly(LaurentPoly(1L));
  std::vector<int> sigma(l);
  std::iota(sigma.begin(), sigma.end(), 0);
  NCPoly det;
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j) inversions += sigma[i] > sigma[j];
    NCPoly term(LaurentPoly(inversions % 2 ? -1L : 1L));
    for (int i = 0; i < l && !term.is_zero(); ++i) term *= NCPoly::gen(Kind::P, lambda.part(i) - i + sigma[i]);
    det += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return normal_order(det, true);
}

Report verify_gamma_generation(int n_max) {
  const std::string id = "gamma-generation(" + std::to_string(n_max) + ")";
  if (n_max < 1) throw std::invalid_argument("verify_gamma_generation: n_max must be positive");
  std::vector<std::string> bad;
  const auto shapes = partitions_up_to(n_max);
  for (const auto& lambda : shapes) {
    const FockElem got = apply_ncpoly(jacobi_trudi(lambda), FockElem(Partition()));
    const FockElem residual = got - FockElem(lambda);
    if (!residual.is_zero()) bad.push_back(lambda.str() + ": " + residual.str());
  }
  const std::string value = std::to_string(shapes.size()) + " partitions";
  return bad.empty() ? Report::ok(id, value) : Report::fail(id, bad, value);
}

std::vector<Word> normal_monomials(int d) {
  std::vector<Word> out;
  const auto parts = partitions_up_to(d);
  for (const auto& alpha : parts)
    for (const auto& beta : parts) {
      if (alpha.size() + beta.size() > d) continue;
      Word w;
      for (int a : alpha.parts()) w.push_back({Kind::P, a});
      for (int b : beta.parts()) w.push_back({Kind::Q, b});
      out.push_back(std::move(w));
    }
  return out;
}

namespace {

using Row = std::map<std::pair<Partition, Partition>, LaurentPoly>;

constexpr unsigned long kPrime = 2305843009213693951UL;  // 2^61 - 1

unsigned long mulmod(unsigned long a, unsigned long b) {
  return static_cast<unsigned long>(static_cast<unsigned __int128>(a) * b % kPrime);
}

unsigned long powmod(unsigned long a, unsigned long e) {
  unsigned long r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

unsigned long eval_mod(const LaurentPoly& x, unsigned long t) {
  unsigned long s = 0;
  for (const auto& [e, c] : x.terms()) {
    const unsigned long cm = mpz_fdiv_ui(c.get_mpz_t(), kPrime);
    const unsigned long te = e >= 0 ? powmod(t, e) : powmod(powmod(t, kPrime - 2), -e);
    s = (s + mulmod(cm, te)) % kPrime;
  }
  return s;
}

int rank_mod_p(const std::vector<std::vector<unsigned long>>& rows_in) {
  auto rows = rows_in;
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const unsigned long inv = powmod(rows[r][c], kPrime - 2);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const unsigned long f = mulmod(rows[i][c], inv);
      for (size_t j = c; j < cols; ++j)
        rows[i][j] = (rows[i][j] + kPrime - mulmod(f, rows[r][j])) % kPrime;
    }
    ++r;
  }
  return static_cast<int>(r);
}

int rank_bareiss(std::vector<std::vector<LaurentPoly>> rows) {
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  LaurentPoly prev(1L);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]).exact_div(prev);
      rows[i][c] = LaurentPoly();
    }
    prev = rows[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

RankReport faithfulness_rank(int word_degree, int size_bound) {
  if (word_degree < 1) throw std::invalid_argument("faithfulness_rank: word degree must be positive");
  if (size_bound < word_degree) throw std::invalid_argument("faithfulness_rank: size bound below word degree");
  RankReport rep;
  rep.word_degree = word_degree;
  rep.size_bound = size_bound;
  const auto monos = normal_monomials(word_degree);
  rep.monomials = static_cast<int>(monos.size());

  // A shared domain keeps the flattened vectors comparable across monomials.
  const auto domain = partitions_up_to(size_bound - word_degree);
  std::vector<Row> rows;
  std::map<std::pair<Partition, Partition>, size_t> col_index;
  for (const auto& w : monos) {
    Row row;
    const NCPoly op = NCPoly::word(w);
    for (const auto& lambda : domain) {
      const FockElem image = apply_ncpoly(op, FockElem(lambda));
      for (const auto& [mu, c] : image.terms()) {
        row.emplace(std::make_pair(lambda, mu), c);
        col_index.emplace(std::make_pair(lambda, mu), 0);
      }
    }
    rows.push_back(std::move(row));
  }
  size_t k = 0;
  for (auto& [key, idx] : col_index) idx = k++;

  std::vector<std::vector<unsigned long>> modrows(rows.size(), std::vector<unsigned long>(k, 0));
  for (size_t i = 0; i < rows.size(); ++i)
    for (const auto& [key, c] : rows[i]) modrows[i][col_index[key]] = eval_mod(c, 2);
  rep.rank = rank_mod_p(modrows);
  rep.method = "mod-p at t=2";
  if (rep.full()) return rep;

  // A specialization can only lose rank; settle it exactly.
  std::vector<std::vector<LaurentPoly>> exact(rows.size(), std::vector<LaurentPoly>(k));
  for (size_t i = 0; i < rows.size(); ++i)
    for (const auto& [key, c] : rows[i]) exact[i][col_index[key]] = c;
  rep.rank = rank_bareiss(std::move(exact));
  rep.method = "fraction-free over Z[t]";
  return rep;
}

}  // namespace heis
