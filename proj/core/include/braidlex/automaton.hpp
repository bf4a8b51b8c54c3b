#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "braidlex/segment_config.hpp"
#include "braidlex/sparse_matrix.hpp"
#include "braidlex/state_counts.hpp"
#include "braidlex/word.hpp"

namespace braidlex {

using StateIndex = std::int32_t;

inline constexpr int kDefaultBuildLimit = 14;

// Minimal DFA of the max-lex language of A_n, states named by segment
// configurations. Built by breadth-first closure from (n, n, n, {}); state
// indices follow discovery order with letters tried in increasing order.
// Immutable after build.
class Automaton {
 public:
  // Throws LimitExceeded when n > max_n.
  static Automaton build(int n, int max_n = kDefaultBuildLimit);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return states_.size(); }
  StateIndex initial() const noexcept { return 0; }

  const SegmentConfig& state(StateIndex s) const { return states_.at(s); }
  std::span<const SegmentConfig> states() const noexcept { return states_; }
  std::optional<StateIndex> find(const SegmentConfig& c) const;

  // Target of the arrow labeled a_letter, or nullopt if forbidden.
  std::optional<StateIndex> step(StateIndex s, Letter letter) const {
    auto t = table_[static_cast<std::size_t>(s) * n_ + (letter - 1)];
    if (t < 0) return std::nullopt;
    return t;
  }
  int final_letter(StateIndex s) const { return states_.at(s).j; }

  // State reached by reading w from the initial state.
  std::optional<StateIndex> run(const Word& w) const;

 private:
  Automaton() = default;

  int n_ = 0;
  std::vector<SegmentConfig> states_;
  std::unordered_map<SegmentConfig, StateIndex> index_;
  std::vector<StateIndex> table_;  // size() * n, -1 where forbidden
};

bool accepts(const Automaton& a, const Word& w);

// Entry (p, q) = 1 iff some arrow leads p -> q.
SparseBooleanMatrix incidence_matrix(const Automaton& a);

// States with i = 1, ascending. Cross-checked against the graph: the set is
// closed, strongly connected, and reachable from every state. Throws
// InternalConsistencyError on disagreement.
std::vector<StateIndex> recurrent_states(const Automaton& a);

// Incidence matrix restricted to recurrent_states(a), in that order.
// Throws InternalConsistencyError if it is not primitive.
SparseBooleanMatrix recurrent_matrix(const Automaton& a);

struct WordCounts {
  int k = 0;
  std::vector<BigInt> per_state;   // first row of M^k, BFS order
  BigInt total;                    // |L_{n,k}|
  std::vector<BigInt> per_letter;  // [r-1] = words ending with a_r; k=0 counts none
};

// Exact word counts by k sparse vector-matrix products.
WordCounts count_words(const Automaton& a, int k);

}  // namespace braidlex
