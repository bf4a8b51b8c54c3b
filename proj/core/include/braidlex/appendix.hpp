#pragma once

// Direct recursive generation of the recurrent incidence matrix R_n, without
// building the automaton, and the canonical state ordering it assumes.

#include <cstdint>
#include <vector>

#include "braidlex/automaton.hpp"
#include "braidlex/segment_config.hpp"
#include "braidlex/sparse_matrix.hpp"
#include "braidlex/state_counts.hpp"

namespace braidlex::appendix {

// Zero-based positions, inside the recurrent block for A_{j+1}, of the
// sources of the arrows between consecutive nested blocks. values has length
// 2^{j-1} and its first half is the vector for j - 1.
struct HVector {
  int j = 1;
  std::vector<std::int64_t> values;
};

// Requires counts.max_n >= j.
HVector compute_H(int j, const StateCounts& counts);

// Inserts the arrows of the recurrent block for A_j (closed) or of its
// black-shifted copy (open) with upper-left corner at one-based (1+s, 1+s).
// Throws IndexError on a write outside the builder.
void submatrix(CoordinateBuilder& r, int j, const HVector& h, std::int64_t s,
               bool closed, const StateCounts& counts);

// R_n generated by the recursion, in canonical order.
SparseBooleanMatrix build_R_direct(int n);

// Recurrent configurations in canonical order: t_{1,1..n}, the black-shifted
// copy of the order for n - 1, then for m = 1..n-1 the segment-[1, m+1]
// copy of the order for m followed by t_{m+1,k} for k = m+2..n.
std::vector<SegmentConfig> canonical_recurrent_configs(int n);
// All configurations: shifted order for n - 1, then the recurrent order.
std::vector<SegmentConfig> canonical_configs(int n);

// Permutation from canonical recurrent positions to automaton state indices.
// Throws InternalConsistencyError if a generated config is not a state.
std::vector<StateIndex> canonical_ordering(const Automaton& a);
// Same for all states.
std::vector<StateIndex> canonical_state_order(const Automaton& a);

// recurrent_matrix(a) with rows and columns in canonical order.
SparseBooleanMatrix canonical_recurrent_matrix(const Automaton& a);
// incidence_matrix(a) with rows and columns in canonical order.
SparseBooleanMatrix canonical_incidence_matrix(const Automaton& a);

}  // namespace braidlex::appendix
