#pragma once

#include "heis/diagram.hpp"
#include "heis/heisenberg.hpp"
#include "heis/partitions_fock.hpp"

#include <random>

namespace heis::testing {

using Rng = std::mt19937_64;

Word random_word(Rng& rng, int max_len, int max_index);
NCPoly random_ncpoly(Rng& rng, int max_terms, int max_len, int max_index);
LaurentPoly random_laurent(Rng& rng, int max_terms = 4, int min_exp = -3, int max_exp = 3, int coeff = 5);
Partition random_partition(Rng& rng, int max_size);

// Random well-typed diagram grown from `bottom` by up to `len` slices, never wider than max_width.
Diagram random_diagram(Rng& rng, const Signature& bottom, int len, int max_width, Calculus c);
// Random closed diagram: a random walk from the empty signature, then capped off.
Diagram random_closed_diagram(Rng& rng, int len, int max_width, Calculus c);
// Random diagram in Hom(U^a D^b, U^c D^d) with (a,b) != (c,d); retries until one is found.
Diagram random_block_diagram(Rng& rng, int len, int max_width, Calculus c);

}  // namespace heis::testing
