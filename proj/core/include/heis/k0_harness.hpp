#pragma once

#include "heis/heisenberg.hpp"
#include "heis/partitions_fock.hpp"
#include "heis/report.hpp"
#include "heis/scalars.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace heis {

// Matrix of a Fock operator: entries[i][j] is the coefficient of codomain[i] in the image of domain[j].
struct OpMatrix {
  std::vector<Partition> domain;
  std::vector<Partition> codomain;
  std::vector<std::vector<LaurentPoly>> entries;
  int size_bound = 0;
  int headroom = 0;  // domain holds partitions of size <= size_bound - headroom

  const LaurentPoly& at(const Partition& mu, const Partition& lambda) const;
};

class BoundError : public std::invalid_argument {
 public:
  BoundError(const std::string& msg, int required) : std::invalid_argument(msg), required_bound(required) {}
  int required_bound;
};

// Largest size increase any word of expr reaches while acting right to left.
int raising_headroom(const NCPoly& expr);

// Throws BoundError when the headroom exceeds size_bound.
OpMatrix op_matrix(const NCPoly& expr, int size_bound);

enum class RelationVariant { Deformed, ClassicalH, ClassicalE };
const char* variant_name(RelationVariant v);

Report verify_relation_operators(int n, int m, RelationVariant variant, int size_bound);

// Fock-level commutators: QP - PQ = (1 + t) Id, Q2 = t Q1, and the two summands separately.
std::vector<Report> verify_fock_relations(int size_bound);

// det(h_{lambda_i - i + j}) with h_k = p_k, expanded and normal ordered.
NCPoly jacobi_trudi(const Partition& lambda);

Report verify_gamma_generation(int n_max);

struct RankReport {
  int word_degree = 0;
  int size_bound = 0;
  int monomials = 0;
  int rank = 0;
  std::string method;  // "mod-p at t=2" or "fraction-free over Z[t]"
  bool full() const { return rank == monomials; }
};

// Normal-form words p^alpha q^beta with |alpha| + |beta| <= d.
std::vector<Word> normal_monomials(int d);

RankReport faithfulness_rank(int word_degree, int size_bound);

}  // namespace heis
