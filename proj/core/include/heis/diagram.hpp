#pragma once

#include "heis/report.hpp"
#include "heis/scalars.hpp"

#include <climits>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace heis {

// U is an upward strand endpoint (P), D a downward one (Q).
enum class Orient : unsigned char { U, D };
using Signature = std::vector<Orient>;

std::string sig_str(const Signature& s);
Signature parse_sig(const std::string& s);  // "U,D" or "UD"; "" for the empty signature

enum class Gen : unsigned char {
  IdU, IdD,
  XUU, XDD,
  XDU,  // bottom D,U -> top U,D
  XUD,  // bottom U,D -> top D,U
  CupQP,  // counterclockwise, nothing -> D,U
  CupPQ,  // clockwise, nothing -> U,D
  CapQP,  // counterclockwise, D,U -> nothing
  CapPQ,  // clockwise, U,D -> nothing
  DotU, DotD,  // always carry the odd generator v; a dot labelled 1 is the identity
};

const char* gen_name(Gen g);
std::optional<Gen> gen_from_name(const std::string& s);
const Signature& gen_in(Gen g);
const Signature& gen_out(Gen g);
int gen_degree(Gen g);
int gen_sdegree(Gen g);
bool is_crossing(Gen g);
bool is_cup(Gen g);
bool is_cap(Gen g);
bool is_dot(Gen g);
Gen crossing_for(Orient left, Orient right);  // crossing whose bottom reads (left, right)
Gen dot_for(Orient o);

struct Slice {
  int at;
  Gen gen;
  friend auto operator<=>(const Slice&, const Slice&) = default;
};

struct Diagram {
  Signature bottom;
  Signature top;
  std::vector<Slice> slices;

  static Diagram identity(const Signature& s);
  // One primitive with no through strands.
  static Diagram prim(Gen g);
  std::string str() const;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;
};

enum class Calculus { DH, KH };
const char* calculus_name(Calculus c);

struct ValidationError {
  int slice;  // -1 for a boundary mismatch at the top
  std::string message;
};

// Empty result means the diagram is well typed.
std::vector<ValidationError> validate(const Diagram& d, Calculus c = Calculus::DH);
// Signature reached by chaining slices from the bottom; throws std::invalid_argument if ill typed.
Signature chain_top(const Signature& bottom, const std::vector<Slice>& slices);

class CompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rational linear combination of diagrams sharing boundary signatures.
class DiagLin {
 public:
  using Terms = std::map<Diagram, Rational>;

  DiagLin(Signature bottom, Signature top) : bottom_(std::move(bottom)), top_(std::move(top)) {}
  DiagLin(const Diagram& d, const Rational& c = 1);  // NOLINT

  const Signature& bottom() const { return bottom_; }
  const Signature& top() const { return top_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Diagram& d, const Rational& c);

  DiagLin& operator+=(const DiagLin& o);
  DiagLin& operator-=(const DiagLin& o);
  DiagLin scaled(const Rational& c) const;
  std::vector<std::string> term_strings() const;
  std::string str() const;

  friend DiagLin operator+(DiagLin a, const DiagLin& b) { return a += b; }
  friend DiagLin operator-(DiagLin a, const DiagLin& b) { return a -= b; }
  friend bool operator==(const DiagLin&, const DiagLin&) = default;

 private:
  Signature bottom_, top_;
  Terms terms_;
};

// f on top of g. Throws CompositionError unless top(g) == bottom(f).
Diagram vcompose(const Diagram& f, const Diagram& g);
DiagLin vcompose(const DiagLin& f, const DiagLin& g);
// f to the left of g.
Diagram hcompose(const Diagram& f, const Diagram& g);
DiagLin hcompose(const DiagLin& f, const DiagLin& g);
// Ring-style product: zero when the boundaries do not match.
DiagLin compose_or_zero(const DiagLin& f, const DiagLin& g);

inline constexpr int kInfiniteDegree = INT_MAX;
int degree(const Diagram& d, int shift_in = 0, int shift_out = 0);
int sdegree(const Diagram& d);
// Minimum over terms; kInfiniteDegree for the zero element.
int degree(const DiagLin& x);

// ---- rewriting ----

// Which applicable rule instance is rewritten first.
enum class Strategy { Lowest, Highest };

enum class RuleKind {
  TwistedCup, TwistedCap, CurlUp, CurlDown,  // left curls, all zero
  EyePQ, DoubleQP,                            // eye on PQ, double crossing on QP
  PermBlock, PureDouble, MixedBraid,          // symmetric group relations
  Snake,
  CircleCCW,
};
const char* rule_name(RuleKind k);

struct RuleInstance {
  RuleKind kind;
  std::vector<int> group;  // slice indices involved, ascending
};

// Canonical representative: identity slices removed, slices in interchange order, dots at their
// anchors. Returns the supercommutation sign, or nullopt when two v dots collide on one strand.
std::optional<std::pair<int, Diagram>> canonicalize(const Diagram& d, Calculus c = Calculus::DH);

// Instances applicable to a canonical diagram, in priority order then bottom-to-top.
std::vector<RuleInstance> rule_instances(const Diagram& canonical, Calculus c);
// Result of one rewrite step (terms are not canonicalized).
DiagLin apply_rule(const Diagram& canonical, const RuleInstance& r, Calculus c);

DiagLin normalize(const DiagLin& x, Calculus c, Strategy s = Strategy::Lowest);

class NotScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scalar value of a closed diagram. Throws NotScalarError if clockwise bubbles survive, since the
// relations leave them free.
Rational eval_closed(const DiagLin& x, Calculus c, Strategy s = Strategy::Lowest);

// ---- label translation and structural checks ----

using Labels = std::vector<int>;  // one entry in {1,2} per D endpoint, left to right

// Image in the dotted calculus of a dot-free diagram with labelled D endpoints.
// Clockwise cups/caps only accept label 1; unlabelled internal D segments are summed over.
// slice_labels pins the D arm label of individual cups and caps (by slice index).
DiagLin psi_translate(const Diagram& kh, const Labels& bottom_labels, const Labels& top_labels,
                      const std::map<int, int>& slice_labels = {});

std::vector<Report> verify_biproduct(Calculus c);
std::vector<Report> verify_psi_relations();
std::vector<Report> verify_circles();
// Clockwise circle obtained directly and through the eye relation; both must normalize alike.
Report verify_clockwise_circle(Calculus c);
Report verify_degree_table();

}  // namespace heis
