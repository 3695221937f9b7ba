#include "random_gen.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace heis::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

const Gen kAll[] = {Gen::XUU, Gen::XDD, Gen::XDU, Gen::XUD, Gen::CupQP, Gen::CupPQ,
                    Gen::CapQP, Gen::CapPQ, Gen::DotU, Gen::DotD};

std::vector<Slice> moves(const Signature& cur, int max_width, Calculus c) {
  std::vector<Slice> out;
  const int w = static_cast<int>(cur.size());
  for (Gen g : kAll) {
    if (c == Calculus::KH && is_dot(g)) continue;
    const Signature& in = gen_in(g);
    const int k = static_cast<int>(in.size());
    const int grow = static_cast<int>(gen_out(g).size()) - k;
    if (w + grow > max_width) continue;
    for (int at = 0; at + k <= w; ++at)
      if (std::equal(in.begin(), in.end(), cur.begin() + at)) out.push_back({at, g});
  }
  return out;
}

void apply(Signature& cur, const Slice& s) {
  const auto& in = gen_in(s.gen);
  const auto& out = gen_out(s.gen);
  cur.erase(cur.begin() + s.at, cur.begin() + s.at + static_cast<long>(in.size()));
  cur.insert(cur.begin() + s.at, out.begin(), out.end());
}

bool is_block(const Signature& s) { return std::is_sorted(s.begin(), s.end()); }  // U < D

std::pair<int, int> block_shape(const Signature& s) {
  const int u = static_cast<int>(std::count(s.begin(), s.end(), Orient::U));
  return {u, static_cast<int>(s.size()) - u};
}

}  // namespace

Word random_word(Rng& rng, int max_len, int max_index) {
  Word w;
  const int len = uniform(rng, 0, max_len);
  for (int i = 0; i < len; ++i) w.push_back({uniform(rng, 0, 1) ? Kind::P : Kind::Q, uniform(rng, 1, max_index)});
  return w;
}

NCPoly random_ncpoly(Rng& rng, int max_terms, int max_len, int max_index) {
  NCPoly x;
  const int n = uniform(rng, 1, max_terms);
  for (int i = 0; i < n; ++i) x.add(random_word(rng, max_len, max_index), random_laurent(rng, 2, 0, 2, 3));
  return x;
}

LaurentPoly random_laurent(Rng& rng, int max_terms, int min_exp, int max_exp, int coeff) {
  LaurentPoly x;
  const int n = uniform(rng, 0, max_terms);
  for (int i = 0; i < n; ++i) x += LaurentPoly::monomial(uniform(rng, -coeff, coeff), uniform(rng, min_exp, max_exp));
  return x;
}

Partition random_partition(Rng& rng, int max_size) {
  const auto all = partitions_up_to(max_size);
  return all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
}

Diagram random_diagram(Rng& rng, const Signature& bottom, int len, int max_width, Calculus c) {
  Diagram d{bottom, bottom, {}};
  for (int i = 0; i < len; ++i) {
    auto ms = moves(d.top, max_width, c);
    if (ms.empty()) break;
    const Slice s = ms[std::uniform_int_distribution<size_t>(0, ms.size() - 1)(rng)];
    apply(d.top, s);
    d.slices.push_back(s);
  }
  return d;
}

Diagram random_closed_diagram(Rng& rng, int len, int max_width, Calculus c) {
  Diagram d = random_diagram(rng, {}, len, max_width, c);
  while (!d.top.empty()) {
    // Equal numbers of U and D guarantee an adjacent mixed pair.
    std::vector<int> spots;
    for (size_t i = 0; i + 1 < d.top.size(); ++i)
      if (d.top[i] != d.top[i + 1]) spots.push_back(static_cast<int>(i));
    const int at = spots[std::uniform_int_distribution<size_t>(0, spots.size() - 1)(rng)];
    const Slice s{at, d.top[at] == Orient::D ? Gen::CapQP : Gen::CapPQ};
    apply(d.top, s);
    d.slices.push_back(s);
  }
  return d;
}

Diagram random_block_diagram(Rng& rng, int len, int max_width, Calculus c) {
  for (;;) {
    const int a = uniform(rng, 0, 2), b = uniform(rng, 0, 2);
    Signature bottom(a, Orient::U);
    bottom.insert(bottom.end(), b, Orient::D);
    Diagram d = random_diagram(rng, bottom, uniform(rng, 1, len), max_width, c);
    if (is_block(d.top) && block_shape(d.top) != std::make_pair(a, b)) return d;
  }
}

}  // namespace heis::testing
