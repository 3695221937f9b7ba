#include "heis/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace heis {

namespace {

using O = Orient;

Diagram seq(const Signature& bottom, std::vector<Slice> slices) {
  Signature top = chain_top(bottom, slices);
  return Diagram{bottom, top, std::move(slices)};
}

int count_d(const Signature& s) { return static_cast<int>(std::count(s.begin(), s.end(), O::D)); }

struct Dsu {
  std::vector<int> p;
  int make() {
    p.push_back(static_cast<int>(p.size()));
    return static_cast<int>(p.size()) - 1;
  }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

DiagLin psi_translate(const Diagram& kh, const Labels& bottom_labels, const Labels& top_labels,
                      const std::map<int, int>& slice_labels) {
  auto errs = validate(kh, Calculus::KH);
  if (!errs.empty()) throw std::invalid_argument("psi_translate: " + errs.front().message);
  if (static_cast<int>(bottom_labels.size()) != count_d(kh.bottom) ||
      static_cast<int>(top_labels.size()) != count_d(kh.top))
    throw std::invalid_argument("psi_translate: one label per D endpoint is required");
  for (int l : bottom_labels)
    if (l != 1 && l != 2) throw std::invalid_argument("psi_translate: labels are 1 or 2");
  for (int l : top_labels)
    if (l != 1 && l != 2) throw std::invalid_argument("psi_translate: labels are 1 or 2");

  // D segments: maximal runs of downward wire through crossings.
  Dsu dsu;
  std::vector<int> cur;  // segment node per position (-1 for U)
  auto node = [&](O o) { return o == O::D ? dsu.make() : -1; };
  for (O o : kh.bottom) cur.push_back(node(o));
  std::vector<std::pair<int, int>> required;  // (node, label)
  {
    int i = 0;
    for (int n : cur)
      if (n >= 0) required.push_back({n, bottom_labels[i++]});
  }
  std::vector<int> arm_node(kh.slices.size(), -1);  // D arm of each cup or cap
  for (size_t k = 0; k < kh.slices.size(); ++k) {
    const Slice& sl = kh.slices[k];
    const int a = static_cast<int>(gen_in(sl.gen).size());
    std::vector<int> ins(cur.begin() + sl.at, cur.begin() + sl.at + a);
    std::vector<int> outs;
    for (O o : gen_out(sl.gen)) outs.push_back(node(o));
    if (is_crossing(sl.gen)) {
      if (ins[0] >= 0) dsu.unite(ins[0], outs[1]);
      if (ins[1] >= 0) dsu.unite(ins[1], outs[0]);
    } else if (is_cup(sl.gen)) {
      arm_node[k] = outs[0] >= 0 ? outs[0] : outs[1];
    } else if (is_cap(sl.gen)) {
      arm_node[k] = ins[0] >= 0 ? ins[0] : ins[1];
    } else if (sl.gen == Gen::IdD) {
      dsu.unite(ins[0], outs[0]);
    }
    if (sl.gen == Gen::CupPQ || sl.gen == Gen::CapPQ) required.push_back({arm_node[k], 1});
    auto it = slice_labels.find(static_cast<int>(k));
    if (it != slice_labels.end()) {
      if (arm_node[k] < 0) throw std::invalid_argument("psi_translate: label on a slice with no D arm");
      required.push_back({arm_node[k], it->second});
    }
    cur.erase(cur.begin() + sl.at, cur.begin() + sl.at + a);
    cur.insert(cur.begin() + sl.at, outs.begin(), outs.end());
  }
  {
    int i = 0;
    for (int n : cur)
      if (n >= 0) required.push_back({n, top_labels[i++]});
  }

  std::map<int, int> fixed;
  for (auto [n, l] : required) {
    const int r = dsu.find(n);
    auto [it, fresh] = fixed.emplace(r, l);
    if (!fresh && it->second != l) return DiagLin(kh.bottom, kh.top);  // inconsistent labelling
  }
  std::vector<int> free_roots;
  for (size_t n = 0; n < dsu.p.size(); ++n) {
    const int r = dsu.find(static_cast<int>(n));
    if (!fixed.count(r) && std::find(free_roots.begin(), free_roots.end(), r) == free_roots.end())
      free_roots.push_back(r);
  }

  DiagLin out(kh.bottom, kh.top);
  for (unsigned mask = 0; mask < (1u << free_roots.size()); ++mask) {
    std::map<int, int> lab = fixed;
    for (size_t i = 0; i < free_roots.size(); ++i) lab[free_roots[i]] = (mask >> i) & 1u ? 2 : 1;
    Diagram d{kh.bottom, kh.top, {}};
    for (size_t k = 0; k < kh.slices.size(); ++k) {
      const Slice& sl = kh.slices[k];
      if (sl.gen == Gen::CapQP && lab[dsu.find(arm_node[k])] == 2) {
        d.slices.push_back({sl.at, Gen::DotD});
        d.slices.push_back(sl);
      } else if (sl.gen == Gen::CupQP && lab[dsu.find(arm_node[k])] == 1) {
        d.slices.push_back(sl);
        d.slices.push_back({sl.at, Gen::DotD});
      } else {
        d.slices.push_back(sl);
      }
    }
    out.add(d, 1);
  }
  return out;
}

namespace {

Report compare(const std::string& id, const DiagLin& lhs, const DiagLin& rhs, Calculus c) {
  DiagLin diff = normalize(lhs - rhs, c);
  if (diff.is_zero()) return Report::ok(id, normalize(lhs, c).str());
  return Report::fail(id, diff.term_strings(), normalize(lhs, c).str());
}

DiagLin one() { return DiagLin(Diagram::identity({})); }
DiagLin zero(const Signature& b, const Signature& t) { return DiagLin(b, t); }
DiagLin id(const Signature& s) { return DiagLin(Diagram::identity(s)); }

}  // namespace

std::vector<Report> verify_biproduct(Calculus c) {
  const Signature QP{O::D, O::U}, PQ{O::U, O::D}, E{};
  std::vector<DiagLin> pi, iota;
  std::vector<Signature> mid;
  pi.push_back(DiagLin(Diagram::prim(Gen::XDU)));
  pi.push_back(DiagLin(Diagram::prim(Gen::CapQP)));
  iota.push_back(DiagLin(Diagram::prim(Gen::XUD)));
  if (c == Calculus::DH) {
    iota.push_back(DiagLin(seq(E, {{0, Gen::CupQP}, {0, Gen::DotD}})));
    pi.push_back(DiagLin(seq(QP, {{0, Gen::DotD}, {0, Gen::CapQP}})));
  }
  iota.push_back(DiagLin(Diagram::prim(Gen::CupQP)));
  mid = {PQ, E, E};
  const size_t n = pi.size();
  const std::string pre = std::string("biproduct:") + calculus_name(c) + ":";
  std::vector<Report> out;
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      DiagLin lhs = vcompose(pi[j], iota[k]);
      DiagLin rhs = j == k ? (j == 0 ? id(PQ) : one()) : zero(mid[k], mid[j]);
      out.push_back(compare(pre + "pi" + std::to_string(j + 1) + "*iota" + std::to_string(k + 1), lhs, rhs, c));
    }
  DiagLin sum(QP, QP);
  for (size_t k = 0; k < n; ++k) sum += vcompose(iota[k], pi[k]);
  out.push_back(compare(pre + "sum iota*pi = id", sum, id(QP), c));
  return out;
}

std::vector<Report> verify_circles() {
  const Signature E{};
  std::vector<Report> out;
  auto check = [&](const std::string& id, const Diagram& d, Calculus c, const Rational& expect) {
    Rational got = eval_closed(DiagLin(d), c);
    out.push_back(got == expect ? Report::ok(id, to_string(got))
                                : Report::fail(id, {"got " + to_string(got) + ", expected " + to_string(expect)},
                                               to_string(got)));
  };
  check("circle:DH:ccw", seq(E, {{0, Gen::CupQP}, {0, Gen::CapQP}}), Calculus::DH, 0);
  check("circle:DH:ccw-v", seq(E, {{0, Gen::CupQP}, {0, Gen::DotD}, {0, Gen::CapQP}}), Calculus::DH, 1);
  check("circle:DH:ccw-vv", seq(E, {{0, Gen::CupQP}, {0, Gen::DotD}, {1, Gen::DotU}, {0, Gen::CapQP}}),
        Calculus::DH, 0);
  check("circle:KH:ccw", seq(E, {{0, Gen::CupQP}, {0, Gen::CapQP}}), Calculus::KH, 1);
  out.push_back(verify_clockwise_circle(Calculus::DH));
  out.push_back(verify_clockwise_circle(Calculus::KH));
  return out;
}

Report verify_clockwise_circle(Calculus c) {
  const Signature E{}, PQ{O::U, O::D};
  const std::string id = std::string("circle:") + calculus_name(c) + ":cw-two-derivations";
  // Directly, and through the eye relation on PQ.
  DiagLin direct = normalize(DiagLin(seq(E, {{0, Gen::CupPQ}, {0, Gen::CapPQ}})), c);
  DiagLin via_eye =
      normalize(DiagLin(seq(E, {{0, Gen::CupPQ}, {0, Gen::XUD}, {0, Gen::XDU}, {0, Gen::CapPQ}})), c);
  // Undoing the clockwise cup by a zigzag before closing.
  DiagLin via_snake = normalize(
      DiagLin(seq(E, {{0, Gen::CupPQ}, {1, Gen::CupQP}, {2, Gen::CapPQ}, {0, Gen::CapPQ}})), c);
  std::vector<std::string> res;
  for (const auto& s : (direct - via_eye).term_strings()) res.push_back("eye route: " + s);
  for (const auto& s : (direct - via_snake).term_strings()) res.push_back("snake route: " + s);
  return res.empty() ? Report::ok(id, direct.str()) : Report::fail(id, res, direct.str());
}

Report verify_degree_table() {
  struct Row {
    Gen g;
    int deg;
  };
  const Row expect[] = {{Gen::IdU, 0},   {Gen::IdD, 0},   {Gen::XUU, 0},   {Gen::XDD, 0},
                        {Gen::XDU, 0},   {Gen::XUD, 0},   {Gen::CupQP, -1}, {Gen::CupPQ, 0},
                        {Gen::CapQP, 0}, {Gen::CapPQ, 1}, {Gen::DotU, 1},  {Gen::DotD, 1}};
  std::vector<std::string> bad;
  for (const auto& r : expect) {
    if (gen_degree(r.g) != r.deg) bad.push_back(std::string(gen_name(r.g)) + " deg " + std::to_string(gen_degree(r.g)));
    if (gen_sdegree(r.g) != r.deg)
      bad.push_back(std::string(gen_name(r.g)) + " sdeg " + std::to_string(gen_sdegree(r.g)));
  }
  Diagram dotted = seq({}, {{0, Gen::CupQP}, {0, Gen::DotD}, {0, Gen::CapQP}});
  if (degree(dotted) != 0) bad.push_back("dotted ccw circle has degree " + std::to_string(degree(dotted)));
  return bad.empty() ? Report::ok("degree-table", "12 primitives") : Report::fail("degree-table", bad);
}

std::vector<Report> verify_psi_relations() {
  std::vector<Report> out;
  const Calculus DH = Calculus::DH;
  auto labelings = [](int n) {
    std::vector<Labels> all;
    for (unsigned m = 0; m < (1u << n); ++m) {
      Labels l;
      for (int i = 0; i < n; ++i) l.push_back((m >> i) & 1u ? 2 : 1);
      all.push_back(l);
    }
    return all;
  };
  auto tag = [](const Labels& b, const Labels& t) {
    std::string s = "[";
    for (int x : b) s += std::to_string(x);
    s += "|";
    for (int x : t) s += std::to_string(x);
    return s + "]";
  };
  // Both sides with the D labels read off the boundary; a label travels along its strand.
  auto rel = [&](const std::string& name, const Diagram& l, const Diagram& r) {
    const int nb = count_d(l.bottom), nt = count_d(l.top);
    for (const auto& b : labelings(nb))
      for (const auto& t : labelings(nt)) {
        DiagLin fl = psi_translate(l, b, t), fr = psi_translate(r, b, t);
        if (fl.is_zero() && fr.is_zero()) continue;  // inconsistent on both sides
        out.push_back(compare("psi:" + name + tag(b, t), fl, fr, DH));
      }
  };

  // Symmetric group relations, every orientation.
  for (O a : {O::U, O::D})
    for (O b : {O::U, O::D}) {
      if (a == O::D && b == O::U) continue;  // handled by the double-crossing relation below
      Signature s{a, b};
      Gen x1 = crossing_for(a, b), x2 = crossing_for(b, a);
      rel(std::string("double-crossing:") + sig_str(s), seq(s, {{0, x1}, {0, x2}}), Diagram::identity(s));
    }
  for (O a : {O::U, O::D})
    for (O b : {O::U, O::D})
      for (O c : {O::U, O::D}) {
        Signature s{a, b, c};
        Diagram lhs = seq(s, {{0, crossing_for(a, b)}, {1, crossing_for(a, c)}, {0, crossing_for(b, c)}});
        Diagram rhs = seq(s, {{1, crossing_for(b, c)}, {0, crossing_for(a, c)}, {1, crossing_for(a, b)}});
        rel("braid:" + sig_str(s), lhs, rhs);
      }

  // Double crossing on QP: the correction term summed over the internal label.
  {
    const Signature QP{O::D, O::U};
    DiagLin lhs = psi_translate(seq(QP, {{0, Gen::XDU}, {0, Gen::XUD}}), {1}, {1});
    DiagLin rhs = psi_translate(Diagram::identity(QP), {1}, {1});
    for (int k = 1; k <= 2; ++k)
      rhs -= psi_translate(seq(QP, {{0, Gen::CapQP}, {0, Gen::CupQP}}), {k}, {k});
    DiagLin dh_rule = id(QP);
    dh_rule -= DiagLin(seq(QP, {{0, Gen::CapQP}, {0, Gen::CupQP}, {0, Gen::DotD}}));
    dh_rule -= DiagLin(seq(QP, {{0, Gen::DotD}, {0, Gen::CapQP}, {0, Gen::CupQP}}));
    out.push_back(compare("psi:qp-double-crossing", lhs, rhs, DH));
    // The translated right side is literally the dotted double-crossing rule.
    DiagLin diff = rhs - dh_rule;
    const std::string id = "psi:qp-double-crossing-matches-dotted-rule";
    Report r = diff.is_zero() ? Report::ok(id, rhs.str()) : Report::fail(id, diff.term_strings(), rhs.str());
    out.push_back(r);
  }

  // Eye on PQ and left curls.
  rel("eye", seq({O::U, O::D}, {{0, Gen::XUD}, {0, Gen::XDU}}), Diagram::identity({O::U, O::D}));
  {
    Diagram curl_up = seq({O::U}, {{0, Gen::CupQP}, {1, Gen::XUU}, {0, Gen::CapQP}});
    out.push_back(compare("psi:curl-up", psi_translate(curl_up, {}, {}), zero({O::U}, {O::U}), DH));
    Diagram curl_down = seq({O::D}, {{1, Gen::CupQP}, {0, Gen::XDD}, {1, Gen::CapQP}});
    for (int b = 1; b <= 2; ++b)
      for (int t = 1; t <= 2; ++t) {
        DiagLin fl = psi_translate(curl_down, {b}, {t});
        out.push_back(compare("psi:curl-down" + tag({b}, {t}), fl, zero({O::D}, {O::D}), DH));
      }
  }
  // Labelled counterclockwise circles: cap_i after cup_j is delta_ij.
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      DiagLin cap = psi_translate(Diagram::prim(Gen::CapQP), {i}, {});
      DiagLin cup = psi_translate(Diagram::prim(Gen::CupQP), {}, {j});
      DiagLin lhs = vcompose(cap, cup);
      DiagLin rhs = i == j ? one() : zero({}, {});
      out.push_back(compare("psi:labelled-circle[" + std::to_string(i) + std::to_string(j) + "]", lhs, rhs, DH));
    }
  return out;
}

}  // namespace heis
