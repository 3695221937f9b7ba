#include "heis/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace heis {

namespace {

int n_in(Gen g) { return static_cast<int>(gen_in(g).size()); }
int n_out(Gen g) { return static_cast<int>(gen_out(g).size()); }

// Only dots are odd, and only in the dotted calculus.
bool is_odd(Gen g, Calculus c) { return c == Calculus::DH && is_dot(g); }

// ---------------------------------------------------------------------------
// Slice interchange

// Offsets after exchanging an adjacent pair, or nullopt if the two slices overlap.
// `lower` is applied first.
std::optional<std::pair<Slice, Slice>> exchanged(const Slice& lower, const Slice& upper) {
  const int o1 = lower.at, a1 = n_in(lower.gen), b1 = n_out(lower.gen);
  const int o2 = upper.at, a2 = n_in(upper.gen), b2 = n_out(upper.gen);
  if (o2 + a2 <= o1) return std::make_pair(Slice{o2, upper.gen}, Slice{o1 + b2 - a2, lower.gen});
  if (o2 >= o1 + b1) return std::make_pair(Slice{o2 - b1 + a1, upper.gen}, Slice{o1, lower.gen});
  return std::nullopt;
}

bool swap_at(std::vector<Slice>& s, size_t i) {
  auto r = exchanged(s[i], s[i + 1]);
  if (!r) return false;
  s[i] = r->first;
  s[i + 1] = r->second;
  return true;
}

template <class Extra>
bool swap_at(std::vector<Slice>& s, std::vector<Extra>& extra, size_t i) {
  if (!swap_at(s, i)) return false;
  std::swap(extra[i], extra[i + 1]);
  return true;
}

// Offset the slice at index j would have after sliding down to index t, or nullopt if blocked.
std::optional<int> offset_at_front(const std::vector<Slice>& s, size_t t, size_t j) {
  Slice m = s[j];
  for (size_t i = j; i-- > t;) {
    auto r = exchanged(s[i], m);
    if (!r) return std::nullopt;
    m = r->first;
  }
  return m.at;
}

// Greedy leftmost-first ordering: a canonical representative of the interchange class.
template <class Extra>
void canonical_sort(std::vector<Slice>& s, std::vector<Extra>& extra) {
  const size_t n = s.size();
  for (size_t t = 0; t < n; ++t) {
    long best = -1;
    int best_off = 0;
    for (size_t j = t; j < n; ++j) {
      auto off = offset_at_front(s, t, j);
      if (!off) continue;
      if (best < 0) {
        best = static_cast<long>(j);
        best_off = *off;
        continue;
      }
      const bool cup_j = is_cup(s[j].gen), cup_b = is_cup(s[best].gen);
      if (*off < best_off || (*off == best_off && cup_j && !cup_b)) {
        best = static_cast<long>(j);
        best_off = *off;
      } else if (*off == best_off && cup_j && cup_b) {
        // Two cups in the same gap: the earlier one in the sequence fixes which is left.
        const size_t i = static_cast<size_t>(best);
        std::vector<Slice> probe(s.begin(), s.begin() + static_cast<long>(j) + 1);
        for (size_t k = j; k > i + 1; --k)
          if (!swap_at(probe, k - 1)) break;
        // probe[i] is the earlier cup, probe[i+1] the later one right above it.
        const bool later_is_left = probe[i + 1].at < probe[i].at + 2;
        if (later_is_left) {
          best = static_cast<long>(j);
          best_off = *off;
        }
      }
    }
    for (size_t k = static_cast<size_t>(best); k > t; --k) swap_at(s, extra, k - 1);
  }
}

// ---------------------------------------------------------------------------
// Wire graph

struct Graph {
  std::vector<std::vector<int>> in, out;  // per slice
  std::vector<int> prod, prod_port, cons, cons_port;  // per wire; slice -1 is the boundary
  std::vector<Orient> orient;
  std::vector<std::vector<int>> state;  // wire ids before slice k (state[n] is the top)
};

Graph analyze(const Diagram& d) {
  Graph g;
  std::vector<int> cur;
  auto new_wire = [&](Orient o, int slice, int port) {
    g.prod.push_back(slice);
    g.prod_port.push_back(port);
    g.cons.push_back(-1);
    g.cons_port.push_back(-1);
    g.orient.push_back(o);
    return static_cast<int>(g.orient.size()) - 1;
  };
  for (size_t i = 0; i < d.bottom.size(); ++i) cur.push_back(new_wire(d.bottom[i], -1, static_cast<int>(i)));
  for (size_t k = 0; k < d.slices.size(); ++k) {
    g.state.push_back(cur);
    const Slice& sl = d.slices[k];
    const int a = n_in(sl.gen);
    std::vector<int> ins(cur.begin() + sl.at, cur.begin() + sl.at + a);
    for (int p = 0; p < a; ++p) {
      g.cons[ins[p]] = static_cast<int>(k);
      g.cons_port[ins[p]] = p;
    }
    std::vector<int> outs;
    const Signature& o = gen_out(sl.gen);
    for (size_t p = 0; p < o.size(); ++p) outs.push_back(new_wire(o[p], static_cast<int>(k), static_cast<int>(p)));
    cur.erase(cur.begin() + sl.at, cur.begin() + sl.at + a);
    cur.insert(cur.begin() + sl.at, outs.begin(), outs.end());
    g.in.push_back(std::move(ins));
    g.out.push_back(std::move(outs));
  }
  g.state.push_back(cur);
  for (size_t i = 0; i < cur.size(); ++i) g.cons_port[cur[i]] = static_cast<int>(i);
  return g;
}

struct Hit {
  int slice;  // -1 for the boundary
  int port;
};

// Follow a wire upward, passing through dots.
Hit trace_up(const Diagram& d, const Graph& g, int w, std::vector<int>& dots) {
  while (true) {
    const int k = g.cons[w];
    if (k >= 0 && is_dot(d.slices[k].gen)) {
      dots.push_back(k);
      w = g.out[k][0];
      continue;
    }
    return {k, g.cons_port[w]};
  }
}

Hit trace_down(const Diagram& d, const Graph& g, int w, std::vector<int>& dots) {
  while (true) {
    const int k = g.prod[w];
    if (k >= 0 && is_dot(d.slices[k].gen)) {
      dots.push_back(k);
      w = g.in[k][0];
      continue;
    }
    return {k, g.prod_port[w]};
  }
}

// ---------------------------------------------------------------------------
// Bringing a set of slices together

struct Block {
  std::vector<Slice> slices;
  size_t start = 0;
  size_t len = 0;
  int sign = 1;  // Koszul sign of the reordering
};

std::optional<Block> make_consecutive(const std::vector<Slice>& seq, const std::vector<int>& group,
                                      Calculus calc = Calculus::DH) {
  std::vector<Slice> s = seq;
  std::vector<char> member(seq.size(), 0);
  for (int i : group) member[i] = 1;
  int sign = 1;
  auto swap_signed = [calc](std::vector<Slice>& c, std::vector<char>& m, size_t i, int& sg) {
    const bool both_odd = is_odd(c[i].gen, calc) && is_odd(c[i + 1].gen, calc);
    if (!swap_at(c, m, i)) return false;
    if (both_odd) sg = -sg;
    return true;
  };
  auto try_down = [&](size_t j, size_t lo) {
    std::vector<Slice> c = s;
    std::vector<char> m = member;
    int sg = sign;
    for (size_t i = j; i > lo; --i)
      if (!swap_signed(c, m, i - 1, sg)) return false;
    s = std::move(c);
    member = std::move(m);
    sign = sg;
    return true;
  };
  auto try_up = [&](size_t j, size_t hi) {
    std::vector<Slice> c = s;
    std::vector<char> m = member;
    int sg = sign;
    for (size_t i = j; i < hi; ++i)
      if (!swap_signed(c, m, i, sg)) return false;
    s = std::move(c);
    member = std::move(m);
    sign = sg;
    return true;
  };
  for (size_t guard = 0; guard < seq.size() * seq.size() + 4; ++guard) {
    size_t lo = s.size(), hi = 0;
    for (size_t i = 0; i < s.size(); ++i)
      if (member[i]) {
        lo = std::min(lo, i);
        hi = i;
      }
    if (hi + 1 - lo == group.size()) return Block{std::move(s), lo, group.size(), sign};
    bool progress = false;
    for (size_t j = lo + 1; j < hi && !progress; ++j)
      if (!member[j]) progress = try_down(j, lo);
    for (size_t j = hi; j-- > lo + 1 && !progress;)
      if (!member[j]) progress = try_up(j, hi);
    if (!progress) return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Canonical form

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

struct SkInfo {
  std::vector<int> in, out;
  int odd_id = -1;  // height rank among odd elements of the input, -1 if even
};

int class_of(RuleKind k) {
  switch (k) {
    case RuleKind::TwistedCup:
    case RuleKind::TwistedCap:
    case RuleKind::CurlUp:
    case RuleKind::CurlDown: return 0;
    case RuleKind::EyePQ:
    case RuleKind::DoubleQP: return 1;
    case RuleKind::PermBlock:
    case RuleKind::PureDouble:
    case RuleKind::MixedBraid: return 2;
    case RuleKind::Snake: return 3;
    case RuleKind::CircleCCW: return 4;
  }
  return 5;
}

}  // namespace

namespace {

std::optional<std::pair<int, Diagram>> canonicalize_once(const Diagram& d, Calculus calc) {
  // Strip identities and dots; dots ride on the wire they sit on.
  std::vector<Slice> sk;
  std::vector<SkInfo> info;
  std::vector<int> dot_wires, dot_ids;
  std::vector<int> cur;
  int nw = 0, n_odd = 0;
  for (size_t i = 0; i < d.bottom.size(); ++i) cur.push_back(nw++);
  for (const auto& sl : d.slices) {
    if (sl.gen == Gen::IdU || sl.gen == Gen::IdD) continue;
    if (is_dot(sl.gen)) {
      dot_wires.push_back(cur[sl.at]);
      dot_ids.push_back(n_odd++);
      continue;
    }
    const int a = n_in(sl.gen), b = n_out(sl.gen);
    SkInfo si;
    if (is_odd(sl.gen, calc)) si.odd_id = n_odd++;
    si.in.assign(cur.begin() + sl.at, cur.begin() + sl.at + a);
    for (int p = 0; p < b; ++p) si.out.push_back(nw++);
    cur.erase(cur.begin() + sl.at, cur.begin() + sl.at + a);
    cur.insert(cur.begin() + sl.at, si.out.begin(), si.out.end());
    sk.push_back(sl);
    info.push_back(std::move(si));
  }
  UnionFind uf(static_cast<size_t>(nw));
  for (size_t k = 0; k < sk.size(); ++k) {
    const SkInfo& si = info[k];
    if (is_crossing(sk[k].gen)) {
      uf.unite(si.in[0], si.out[1]);
      uf.unite(si.in[1], si.out[0]);
    } else if (is_cup(sk[k].gen)) {
      uf.unite(si.out[0], si.out[1]);
    } else if (is_cap(sk[k].gen)) {
      uf.unite(si.in[0], si.in[1]);
    }
  }
  std::map<int, int> dots_on;
  std::map<int, int> dot_of;  // component -> odd id of its dot
  for (size_t i = 0; i < dot_wires.size(); ++i) {
    const int c = uf.find(dot_wires[i]);
    dot_of[c] = dot_ids[i];
    if (++dots_on[c] > 1) return std::nullopt;
  }
  canonical_sort(sk, info);

  // Anchor: leftmost bottom endpoint of the strand, else its lowest cup.
  std::map<int, int> anchor_bottom;  // component -> bottom position
  for (int p = static_cast<int>(d.bottom.size()) - 1; p >= 0; --p) {
    const int c = uf.find(p);
    if (dots_on.count(c)) anchor_bottom[c] = p;
  }
  Diagram out{d.bottom, d.top, {}};
  std::vector<int> new_order;  // odd ids in output height order
  std::vector<std::pair<int, int>> bottom_dots;  // position, component
  for (const auto& [c, p] : anchor_bottom) bottom_dots.emplace_back(p, c);
  std::sort(bottom_dots.begin(), bottom_dots.end());
  for (const auto& [p, c] : bottom_dots) {
    out.slices.push_back({p, dot_for(d.bottom[p])});
    new_order.push_back(dot_of[c]);
  }
  std::map<int, bool> placed;
  for (const auto& [c, p] : anchor_bottom) placed[c] = true;
  for (size_t k = 0; k < sk.size(); ++k) {
    out.slices.push_back(sk[k]);
    if (info[k].odd_id >= 0) new_order.push_back(info[k].odd_id);
    if (!is_cup(sk[k].gen)) continue;
    const int c = uf.find(info[k].out[0]);
    if (dots_on.count(c) && !placed[c]) {
      placed[c] = true;
      out.slices.push_back({sk[k].at, dot_for(gen_out(sk[k].gen)[0])});
      new_order.push_back(dot_of[c]);
    }
  }
  // Supercommutation: sign of the height reordering of odd elements.
  int sign = 1;
  for (size_t i = 0; i < new_order.size(); ++i)
    for (size_t j = i + 1; j < new_order.size(); ++j)
      if (new_order[i] > new_order[j]) sign = -sign;
  return std::make_pair(sign, std::move(out));
}

}  // namespace

// One greedy pass is not idempotent when a closed component can reach the same region along two
// interchange routes, so iterate to a cycle and take its least member.
std::optional<std::pair<int, Diagram>> canonicalize(const Diagram& d, Calculus c) {
  std::map<Diagram, int> seen;
  int sign = 1;
  Diagram cur = d;
  for (;;) {
    auto r = canonicalize_once(cur, c);
    if (!r) return std::nullopt;
    sign *= r->first;
    cur = std::move(r->second);
    auto [it, fresh] = seen.emplace(cur, sign);
    if (fresh) continue;
    if (it->second != sign) return std::nullopt;  // the diagram equals its own negative
    // cur starts the cycle; walk it once to find the least member.
    std::pair<int, Diagram> best{sign, cur};
    Diagram walk = cur;
    int ws = sign;
    for (;;) {
      auto n = canonicalize_once(walk, c);
      ws *= n->first;
      walk = std::move(n->second);
      if (walk == cur) break;
      if (walk < best.second) best = {ws, walk};
    }
    return best;
  }
}

namespace {

// Standard reduced word of a permutation of a block of strands, as local crossing offsets.
std::vector<int> reduced_word(const std::vector<int>& target) {
  std::vector<int> cur(target.size());
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<int> word;
  for (size_t j = 0; j < target.size(); ++j) {
    size_t p = static_cast<size_t>(std::find(cur.begin(), cur.end(), target[j]) - cur.begin());
    for (size_t q = p; q-- > j;) {
      word.push_back(static_cast<int>(q));
      std::swap(cur[q], cur[q + 1]);
    }
  }
  return word;
}

std::vector<Slice> sorted_block(std::vector<Slice> s) {
  std::vector<char> dummy(s.size());
  canonical_sort(s, dummy);
  return s;
}

// For a consecutive run of same-type crossings: the canonical word, if it differs.
std::optional<std::vector<Slice>> perm_block_replacement(const std::vector<Slice>& block) {
  int lo = block.front().at, hi = block.front().at + 1;
  for (const auto& sl : block) {
    lo = std::min(lo, sl.at);
    hi = std::max(hi, sl.at + 1);
  }
  std::vector<int> cur(static_cast<size_t>(hi - lo + 1));
  std::iota(cur.begin(), cur.end(), 0);
  for (const auto& sl : block) std::swap(cur[sl.at - lo], cur[sl.at - lo + 1]);
  std::vector<Slice> canon;
  for (int q : reduced_word(cur)) canon.push_back({q + lo, block.front().gen});
  std::vector<Slice> a = sorted_block(block), b = sorted_block(canon);
  if (a == b) return std::nullopt;
  return b;
}

void add_instance(std::vector<RuleInstance>& out, const Diagram& d, RuleKind kind, std::vector<int> group) {
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());
  for (const auto& r : out)
    if (r.kind == kind && r.group == group) return;
  if (!make_consecutive(d.slices, group)) return;
  out.push_back({kind, std::move(group)});
}

bool dots_free(const std::vector<int>& dots) { return dots.empty(); }

}  // namespace

std::vector<RuleInstance> rule_instances(const Diagram& d, Calculus) {
  std::vector<RuleInstance> out;
  const Graph g = analyze(d);
  const int n = static_cast<int>(d.slices.size());
  auto gen = [&](int k) { return d.slices[k].gen; };

  for (int k = 0; k < n; ++k) {
    const Gen gk = gen(k);
    std::vector<int> dots;
    if (gk == Gen::CupQP || gk == Gen::XUD || gk == Gen::XDU || gk == Gen::XUU || gk == Gen::XDD) {
      // Both outputs feed the same slice, in order.
      Hit h0 = trace_up(d, g, g.out[k][0], dots);
      Hit h1 = trace_up(d, g, g.out[k][1], dots);
      if (h0.slice >= 0 && h0.slice == h1.slice && h0.port == 0 && h1.port == 1) {
        const Gen gl = gen(h0.slice);
        std::vector<int> grp = dots;
        grp.push_back(k);
        grp.push_back(h0.slice);
        if (gk == Gen::CupQP && gl == Gen::XDU) add_instance(out, d, RuleKind::TwistedCup, grp);
        if (gk == Gen::XUD && gl == Gen::CapQP && dots_free(dots)) add_instance(out, d, RuleKind::TwistedCap, grp);
        if (gk == Gen::XUD && gl == Gen::XDU && dots_free(dots)) add_instance(out, d, RuleKind::EyePQ, grp);
        if (gk == Gen::XDU && gl == Gen::XUD && dots_free(dots)) add_instance(out, d, RuleKind::DoubleQP, grp);
        if ((gk == Gen::XUU || gk == Gen::XDD) && gl == gk && dots_free(dots))
          add_instance(out, d, RuleKind::PureDouble, grp);
        if (gk == Gen::CupQP && gl == Gen::CapQP) add_instance(out, d, RuleKind::CircleCCW, grp);
      }
    }
    if (gk == Gen::XUU) {
      // Curl on an upward strand: cup below, cap above, both counterclockwise.
      std::vector<int> dd;
      Hit below = trace_down(d, g, g.in[k][0], dd);
      Hit above = trace_up(d, g, g.out[k][0], dd);
      if (below.slice >= 0 && gen(below.slice) == Gen::CupQP && below.port == 1 && above.slice >= 0 &&
          gen(above.slice) == Gen::CapQP && above.port == 1) {
        Hit back = trace_down(d, g, g.in[above.slice][0], dd);
        if (back.slice == below.slice && back.port == 0) {
          std::vector<int> grp = dd;
          grp.insert(grp.end(), {below.slice, k, above.slice});
          add_instance(out, d, RuleKind::CurlUp, grp);
        }
      }
    }
    if (gk == Gen::XDD) {
      std::vector<int> dd;
      Hit below = trace_down(d, g, g.in[k][1], dd);
      Hit above = trace_up(d, g, g.out[k][1], dd);
      if (below.slice >= 0 && gen(below.slice) == Gen::CupQP && below.port == 0 && above.slice >= 0 &&
          gen(above.slice) == Gen::CapQP && above.port == 0) {
        Hit back = trace_down(d, g, g.in[above.slice][1], dd);
        if (back.slice == below.slice && back.port == 1) {
          std::vector<int> grp = dd;
          grp.insert(grp.end(), {below.slice, k, above.slice});
          add_instance(out, d, RuleKind::CurlDown, grp);
        }
      }
    }
    if (is_crossing(gk)) {
      // Triangle (o+1, o, o+1) with mixed orientations.
      std::vector<int> dd;
      Hit b = trace_up(d, g, g.out[k][0], dd);
      Hit c = trace_up(d, g, g.out[k][1], dd);
      if (dd.empty() && b.slice >= 0 && c.slice >= 0 && b.port == 1 && c.port == 1 && is_crossing(gen(b.slice)) &&
          is_crossing(gen(c.slice))) {
        Hit bc = trace_up(d, g, g.out[b.slice][1], dd);
        if (dd.empty() && bc.slice == c.slice && bc.port == 0) {
          const Orient o0 = g.orient[g.in[b.slice][0]];
          const Orient o1 = g.orient[g.in[k][0]];
          const Orient o2 = g.orient[g.in[k][1]];
          if (!(o0 == o1 && o1 == o2)) add_instance(out, d, RuleKind::MixedBraid, {k, b.slice, c.slice});
        }
      }
    }
    if (is_cap(gk)) {
      // Zigzags: the cap eats one arm of a cup and a neighbouring strand.
      std::vector<int> dl, dr;
      Hit l = trace_down(d, g, g.in[k][0], dl);
      Hit r = trace_down(d, g, g.in[k][1], dr);
      if (r.slice >= 0 && is_cup(gen(r.slice)) && r.port == 0 && !(l.slice == r.slice)) {
        std::vector<int> grp = dr;
        grp.insert(grp.end(), {r.slice, k});
        add_instance(out, d, RuleKind::Snake, grp);
      }
      if (l.slice >= 0 && is_cup(gen(l.slice)) && l.port == 1 && !(r.slice == l.slice)) {
        // Left arm dots are anchored right above the cup; carry them along.
        std::vector<int> dots_left;
        trace_up(d, g, g.out[l.slice][0], dots_left);
        std::vector<int> grp = dl;
        grp.insert(grp.end(), dots_left.begin(), dots_left.end());
        grp.insert(grp.end(), {l.slice, k});
        add_instance(out, d, RuleKind::Snake, grp);
      }
    }
  }

  // Maximal runs of same-type upward (or downward) crossings joined by wires.
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    const Gen gk = gen(k);
    if ((gk != Gen::XUU && gk != Gen::XDD) || seen[k]) continue;
    std::vector<int> cluster{k}, stack{k};
    seen[k] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      std::vector<int> nbrs;
      for (int w : g.in[x])
        if (g.prod[w] >= 0) nbrs.push_back(g.prod[w]);
      for (int w : g.out[x])
        if (g.cons[w] >= 0) nbrs.push_back(g.cons[w]);
      for (int y : nbrs)
        if (!seen[y] && gen(y) == gk) {
          seen[y] = 1;
          cluster.push_back(y);
          stack.push_back(y);
        }
    }
    if (cluster.size() < 2) continue;
    std::sort(cluster.begin(), cluster.end());
    auto blk = make_consecutive(d.slices, cluster);
    if (!blk) continue;
    std::vector<Slice> run(blk->slices.begin() + static_cast<long>(blk->start),
                           blk->slices.begin() + static_cast<long>(blk->start + blk->len));
    if (perm_block_replacement(run)) out.push_back({RuleKind::PermBlock, cluster});
  }

  std::stable_sort(out.begin(), out.end(), [](const RuleInstance& a, const RuleInstance& b) {
    const int ca = class_of(a.kind), cb = class_of(b.kind);
    if (ca != cb) return ca < cb;
    return a.group < b.group;
  });
  return out;
}

DiagLin apply_rule(const Diagram& d, const RuleInstance& r, Calculus c) {
  DiagLin result(d.bottom, d.top);
  auto blk = make_consecutive(d.slices, r.group, c);
  if (!blk) throw std::logic_error("rule instance no longer applicable");
  const std::vector<Slice>& s = blk->slices;
  const auto first = s.begin() + static_cast<long>(blk->start);
  const auto last = first + static_cast<long>(blk->len);
  std::vector<Slice> block(first, last);
  std::vector<Slice> skel;
  int ndots = 0;
  for (const auto& sl : block) {
    if (is_dot(sl.gen))
      ++ndots;
    else
      skel.push_back(sl);
  }
  auto emit = [&](const std::vector<Slice>& repl, const Rational& coef) {
    Diagram nd{d.bottom, d.top, std::vector<Slice>(s.begin(), first)};
    nd.slices.insert(nd.slices.end(), repl.begin(), repl.end());
    nd.slices.insert(nd.slices.end(), last, s.end());
    result.add(nd, coef * blk->sign);
  };
  // Signature just below the block.
  std::vector<Slice> prefix(s.begin(), first);
  const Signature below = chain_top(d.bottom, prefix);

  switch (r.kind) {
    case RuleKind::TwistedCup:
    case RuleKind::TwistedCap:
    case RuleKind::CurlUp:
    case RuleKind::CurlDown:
      break;
    case RuleKind::EyePQ:
    case RuleKind::PureDouble:
      emit({}, 1);
      break;
    case RuleKind::DoubleQP: {
      const int o = skel.front().at;
      emit({}, 1);
      if (c == Calculus::DH) {
        emit({{o, Gen::CapQP}, {o, Gen::CupQP}, {o, Gen::DotD}}, -1);
        emit({{o, Gen::DotD}, {o, Gen::CapQP}, {o, Gen::CupQP}}, -1);
      } else {
        emit({{o, Gen::CapQP}, {o, Gen::CupQP}}, -1);
      }
      break;
    }
    case RuleKind::PermBlock: {
      auto repl = perm_block_replacement(block);
      if (!repl) throw std::logic_error("permutation block already canonical");
      emit(*repl, 1);
      break;
    }
    case RuleKind::MixedBraid: {
      const int o = skel[1].at;  // the middle crossing sits one to the left
      const Orient a = below[o], b = below[o + 1], cc = below[o + 2];
      emit({{o, crossing_for(a, b)}, {o + 1, crossing_for(a, cc)}, {o, crossing_for(b, cc)}}, 1);
      break;
    }
    case RuleKind::Snake: {
      const Slice& cup = skel[0];
      const Slice& cap = skel[1];
      const int o = std::min(cup.at, cap.at);
      if (ndots == 0) {
        emit({}, 1);
      } else {
        // Slide the dot below the block first.
        int sg = 1;
        for (const auto& sl : block) {
          if (is_dot(sl.gen)) break;
          if (is_odd(sl.gen, c)) sg = -sg;
        }
        emit({{o, dot_for(below[o])}}, sg);
      }
      break;
    }
    case RuleKind::CircleCCW: {
      Rational v = 1;
      if (c == Calculus::DH) v = ndots == 1 ? 1 : 0;
      emit({}, v);
      break;
    }
  }
  return result;
}

namespace {

constexpr long kRewriteBudget = 2'000'000;

struct Normalizer {
  Calculus calc;
  Strategy strat;
  std::map<Diagram, DiagLin> memo;
  std::set<Diagram> active;
  long steps = 0;

  const DiagLin& nf(const Diagram& canon) {
    auto it = memo.find(canon);
    if (it != memo.end()) return it->second;
    if (++steps > kRewriteBudget) throw std::runtime_error("normalize: rewrite budget exhausted");
    if (!active.insert(canon).second) throw std::runtime_error("normalize: rewriting cycle at " + canon.str());
    auto inst = rule_instances(canon, calc);
    DiagLin out(canon.bottom, canon.top);
    if (inst.empty()) {
      out.add(canon, 1);
    } else {
      const int cls = class_of(inst.front().kind);
      size_t pick = 0;
      if (strat == Strategy::Highest)
        while (pick + 1 < inst.size() && class_of(inst[pick + 1].kind) == cls) ++pick;
      DiagLin step = apply_rule(canon, inst[pick], calc);
      for (const auto& [d, c] : step.terms()) {
        auto cf = canonicalize(d, calc);
        if (!cf) continue;
        out += nf(cf->second).scaled(c * cf->first);
      }
    }
    active.erase(canon);
    return memo.emplace(canon, std::move(out)).first->second;
  }
};

}  // namespace

DiagLin normalize(const DiagLin& x, Calculus c, Strategy s) {
  for (const auto& [d, k] : x.terms()) {
    auto errs = validate(d, c);
    if (!errs.empty()) throw std::invalid_argument("normalize: invalid diagram " + d.str() + ": " + errs.front().message);
  }
  Normalizer nz{c, s, {}, {}, 0};
  DiagLin out(x.bottom(), x.top());
  for (const auto& [d, k] : x.terms()) {
    auto cf = canonicalize(d, c);
    if (!cf) continue;
    out += nz.nf(cf->second).scaled(k * cf->first);
  }
  return out;
}

Rational eval_closed(const DiagLin& x, Calculus c, Strategy s) {
  if (!x.bottom().empty() || !x.top().empty()) throw std::invalid_argument("eval_closed: diagram has endpoints");
  DiagLin n = normalize(x, c, s);
  Rational v = 0;
  for (const auto& [d, k] : n.terms()) {
    if (!d.slices.empty()) throw NotScalarError("closed diagram reduces to a non-scalar: " + n.str());
    v += k;
  }
  return v;
}

}  // namespace heis
