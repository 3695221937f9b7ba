#include "heis/diagram.hpp"

#include <algorithm>
#include <array>

namespace heis {

namespace {

using O = Orient;

struct GenInfo {
  const char* name;
  Signature in;
  Signature out;
  int deg;
};

const std::array<GenInfo, 12>& gen_table() {
  static const std::array<GenInfo, 12> t{{
      {"IdU", {O::U}, {O::U}, 0},
      {"IdD", {O::D}, {O::D}, 0},
      {"XUU", {O::U, O::U}, {O::U, O::U}, 0},
      {"XDD", {O::D, O::D}, {O::D, O::D}, 0},
      {"XDU", {O::D, O::U}, {O::U, O::D}, 0},
      {"XUD", {O::U, O::D}, {O::D, O::U}, 0},
      {"CupQP", {}, {O::D, O::U}, -1},
      {"CupPQ", {}, {O::U, O::D}, 0},
      {"CapQP", {O::D, O::U}, {}, 0},
      {"CapPQ", {O::U, O::D}, {}, 1},
      {"DotU", {O::U}, {O::U}, 1},
      {"DotD", {O::D}, {O::D}, 1},
  }};
  return t;
}

const GenInfo& info(Gen g) { return gen_table()[static_cast<size_t>(g)]; }

}  // namespace

std::string sig_str(const Signature& s) {
  if (s.empty()) return "()";
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i] == O::U ? "U" : "D";
  }
  return out;
}

Signature parse_sig(const std::string& s) {
  Signature out;
  for (char c : s) {
    if (c == 'U' || c == 'P')
      out.push_back(O::U);
    else if (c == 'D' || c == 'Q')
      out.push_back(O::D);
    else if (c != ',' && c != ' ' && c != '(' && c != ')')
      throw std::invalid_argument("bad signature '" + s + "'");
  }
  return out;
}

const char* gen_name(Gen g) { return info(g).name; }

std::optional<Gen> gen_from_name(const std::string& s) {
  for (size_t i = 0; i < gen_table().size(); ++i)
    if (s == gen_table()[i].name) return static_cast<Gen>(i);
  return std::nullopt;
}

const Signature& gen_in(Gen g) { return info(g).in; }
const Signature& gen_out(Gen g) { return info(g).out; }
int gen_degree(Gen g) { return info(g).deg; }
int gen_sdegree(Gen g) { return info(g).deg; }

bool is_crossing(Gen g) { return g == Gen::XUU || g == Gen::XDD || g == Gen::XDU || g == Gen::XUD; }
bool is_cup(Gen g) { return g == Gen::CupQP || g == Gen::CupPQ; }
bool is_cap(Gen g) { return g == Gen::CapQP || g == Gen::CapPQ; }
bool is_dot(Gen g) { return g == Gen::DotU || g == Gen::DotD; }

Gen crossing_for(Orient l, Orient r) {
  if (l == O::U) return r == O::U ? Gen::XUU : Gen::XUD;
  return r == O::U ? Gen::XDU : Gen::XDD;
}

Gen dot_for(Orient o) { return o == O::U ? Gen::DotU : Gen::DotD; }

Diagram Diagram::identity(const Signature& s) { return Diagram{s, s, {}}; }

Diagram Diagram::prim(Gen g) { return Diagram{gen_in(g), gen_out(g), {{0, g}}}; }

std::string Diagram::str() const {
  std::string s = sig_str(bottom) + " -> " + sig_str(top) + " :";
  if (slices.empty()) s += " id";
  for (const auto& sl : slices) s += " " + std::string(gen_name(sl.gen)) + "@" + std::to_string(sl.at);
  return s;
}

const char* calculus_name(Calculus c) { return c == Calculus::DH ? "DH" : "KH"; }

std::vector<ValidationError> validate(const Diagram& d, Calculus c) {
  std::vector<ValidationError> errs;
  Signature cur = d.bottom;
  for (size_t k = 0; k < d.slices.size(); ++k) {
    const Slice& sl = d.slices[k];
    const int idx = static_cast<int>(k);
    if (static_cast<unsigned>(sl.gen) >= gen_table().size()) {
      errs.push_back({idx, "unknown primitive"});
      return errs;
    }
    if (c == Calculus::KH && is_dot(sl.gen)) {
      errs.push_back({idx, "dots are not allowed in the KH calculus"});
      return errs;
    }
    const Signature& in = gen_in(sl.gen);
    if (sl.at < 0 || sl.at + in.size() > cur.size()) {
      errs.push_back({idx, "offset " + std::to_string(sl.at) + " out of range for " + gen_name(sl.gen) +
                               " on width " + std::to_string(cur.size())});
      return errs;
    }
    if (!std::equal(in.begin(), in.end(), cur.begin() + sl.at)) {
      Signature found(cur.begin() + sl.at, cur.begin() + sl.at + static_cast<long>(in.size()));
      errs.push_back({idx, std::string("orientation mismatch: ") + gen_name(sl.gen) + " expects " +
                               sig_str(in) + " at offset " + std::to_string(sl.at) + ", found " + sig_str(found)});
      return errs;
    }
    const Signature& out = gen_out(sl.gen);
    cur.erase(cur.begin() + sl.at, cur.begin() + sl.at + static_cast<long>(in.size()));
    cur.insert(cur.begin() + sl.at, out.begin(), out.end());
  }
  if (cur != d.top)
    errs.push_back({-1, "orientation mismatch: slices reach " + sig_str(cur) + " but top is " + sig_str(d.top)});
  return errs;
}

Signature chain_top(const Signature& bottom, const std::vector<Slice>& slices) {
  Diagram d{bottom, {}, slices};
  auto errs = validate(d, Calculus::DH);
  // The only acceptable complaint is the top mismatch we provoked on purpose.
  for (const auto& e : errs)
    if (e.slice >= 0) throw std::invalid_argument("slice " + std::to_string(e.slice) + ": " + e.message);
  Signature cur = bottom;
  for (const auto& sl : slices) {
    const Signature& in = gen_in(sl.gen);
    const Signature& out = gen_out(sl.gen);
    cur.erase(cur.begin() + sl.at, cur.begin() + sl.at + static_cast<long>(in.size()));
    cur.insert(cur.begin() + sl.at, out.begin(), out.end());
  }
  return cur;
}

DiagLin::DiagLin(const Diagram& d, const Rational& c) : bottom_(d.bottom), top_(d.top) { add(d, c); }

void DiagLin::add(const Diagram& d, const Rational& c) {
  if (d.bottom != bottom_ || d.top != top_)
    throw CompositionError("term " + d.str() + " does not match boundary " + sig_str(bottom_) + " -> " +
                           sig_str(top_));
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(d, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DiagLin& DiagLin::operator+=(const DiagLin& o) {
  if (o.bottom_ != bottom_ || o.top_ != top_) throw CompositionError("adding morphisms of different type");
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

DiagLin& DiagLin::operator-=(const DiagLin& o) {
  if (o.bottom_ != bottom_ || o.top_ != top_) throw CompositionError("subtracting morphisms of different type");
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

DiagLin DiagLin::scaled(const Rational& c) const {
  DiagLin r(bottom_, top_);
  for (const auto& [d, k] : terms_) r.add(d, k * c);
  return r;
}

std::vector<std::string> DiagLin::term_strings() const {
  std::vector<std::string> out;
  for (const auto& [d, c] : terms_) out.push_back(to_string(c) + " * [" + d.str() + "]");
  return out;
}

std::string DiagLin::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : term_strings()) s += (s.empty() ? "" : " + ") + t;
  return s;
}

Diagram vcompose(const Diagram& f, const Diagram& g) {
  if (g.top != f.bottom)
    throw CompositionError("cannot stack " + sig_str(f.bottom) + " on top of " + sig_str(g.top));
  Diagram r{g.bottom, f.top, g.slices};
  r.slices.insert(r.slices.end(), f.slices.begin(), f.slices.end());
  return r;
}

DiagLin vcompose(const DiagLin& f, const DiagLin& g) {
  if (g.top() != f.bottom())
    throw CompositionError("cannot stack " + sig_str(f.bottom()) + " on top of " + sig_str(g.top()));
  DiagLin r(g.bottom(), f.top());
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) r.add(vcompose(df, dg), cf * cg);
  return r;
}

Diagram hcompose(const Diagram& f, const Diagram& g) {
  Diagram r;
  r.bottom = f.bottom;
  r.bottom.insert(r.bottom.end(), g.bottom.begin(), g.bottom.end());
  r.top = f.top;
  r.top.insert(r.top.end(), g.top.begin(), g.top.end());
  r.slices = f.slices;
  const int shift = static_cast<int>(f.top.size());
  for (const auto& sl : g.slices) r.slices.push_back({sl.at + shift, sl.gen});
  return r;
}

DiagLin hcompose(const DiagLin& f, const DiagLin& g) {
  Signature b = f.bottom(), t = f.top();
  b.insert(b.end(), g.bottom().begin(), g.bottom().end());
  t.insert(t.end(), g.top().begin(), g.top().end());
  DiagLin r(b, t);
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) r.add(hcompose(df, dg), cf * cg);
  return r;
}

DiagLin compose_or_zero(const DiagLin& f, const DiagLin& g) {
  if (g.top() != f.bottom()) return DiagLin(g.bottom(), f.top());
  return vcompose(f, g);
}

int degree(const Diagram& d, int shift_in, int shift_out) {
  int s = shift_in - shift_out;
  for (const auto& sl : d.slices) s += gen_degree(sl.gen);
  return s;
}

int sdegree(const Diagram& d) {
  int s = 0;
  for (const auto& sl : d.slices) s += gen_sdegree(sl.gen);
  return s;
}

int degree(const DiagLin& x) {
  int m = kInfiniteDegree;
  for (const auto& [d, c] : x.terms()) m = std::min(m, degree(d));
  return m;
}

const char* rule_name(RuleKind k) {
  switch (k) {
    case RuleKind::TwistedCup: return "twisted-cup";
    case RuleKind::TwistedCap: return "twisted-cap";
    case RuleKind::CurlUp: return "curl-up";
    case RuleKind::CurlDown: return "curl-down";
    case RuleKind::EyePQ: return "eye";
    case RuleKind::DoubleQP: return "double-crossing";
    case RuleKind::PermBlock: return "permutation-block";
    case RuleKind::PureDouble: return "pure-double-crossing";
    case RuleKind::MixedBraid: return "mixed-braid";
    case RuleKind::Snake: return "snake";
    case RuleKind::CircleCCW: return "ccw-circle";
  }
  return "?";
}

}  // namespace heis
