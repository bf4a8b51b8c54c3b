#include "braidlex/automaton.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "braidlex/errors.hpp"
#include "braidlex/spectral.hpp"

namespace braidlex {

Automaton Automaton::build(int n, int max_n) {
  if (n < 1) throw PreconditionError("automaton needs n >= 1");
  if (n > max_n) {
    throw LimitExceeded("n=" + std::to_string(n) + " exceeds the build limit " +
                        std::to_string(max_n));
  }
  Automaton a;
  a.n_ = n;
  a.states_.push_back(initial_config(n));
  a.index_.emplace(a.states_.back(), 0);

  for (std::size_t s = 0; s < a.states_.size(); ++s) {
    a.table_.resize(a.table_.size() + n, -1);
    const SegmentConfig from = a.states_[s];
    for (Letter r : permitted_letters(from, n)) {
      SegmentConfig to = transition(from, r, n);
      auto [it, inserted] =
          a.index_.emplace(to, static_cast<StateIndex>(a.states_.size()));
      if (inserted) a.states_.push_back(std::move(to));
      a.table_[s * n + (r - 1)] = it->second;
    }
  }
  return a;
}

std::optional<StateIndex> Automaton::find(const SegmentConfig& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<StateIndex> Automaton::run(const Word& w) const {
  if (w.n() != n_) throw MalformedWord("word over a different alphabet");
  StateIndex s = initial();
  for (Letter r : w.letters()) {
    auto next = step(s, r);
    if (!next) return std::nullopt;
    s = *next;
  }
  return s;
}

bool accepts(const Automaton& a, const Word& w) { return a.run(w).has_value(); }

SparseBooleanMatrix incidence_matrix(const Automaton& a) {
  std::vector<SparseBooleanMatrix::Entry> entries;
  for (StateIndex p = 0; p < static_cast<StateIndex>(a.size()); ++p) {
    for (Letter r = 1; r <= a.n(); ++r) {
      if (auto q = a.step(p, r)) {
        entries.push_back({static_cast<std::size_t>(p), static_cast<std::size_t>(*q)});
      }
    }
  }
  return SparseBooleanMatrix(a.size(), std::move(entries));
}

namespace {

// Marks every state reachable from `seeds` following `adjacency`, restricted
// to states where allowed[s] holds.
std::vector<char> reach(const std::vector<std::vector<StateIndex>>& adjacency,
                        const std::vector<StateIndex>& seeds,
                        const std::vector<char>& allowed) {
  std::vector<char> seen(adjacency.size(), 0);
  std::deque<StateIndex> queue;
  for (StateIndex s : seeds) {
    seen[s] = 1;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    StateIndex s = queue.front();
    queue.pop_front();
    for (StateIndex t : adjacency[s]) {
      if (allowed[t] && !seen[t]) {
        seen[t] = 1;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<StateIndex> recurrent_states(const Automaton& a) {
  const std::size_t size = a.size();
  std::vector<StateIndex> out;
  std::vector<char> in_set(size, 0);
  for (StateIndex s = 0; s < static_cast<StateIndex>(size); ++s) {
    if (a.state(s).i == 1) {
      out.push_back(s);
      in_set[s] = 1;
    }
  }
  if (out.empty()) throw InternalConsistencyError("no state with i = 1");

  std::vector<std::vector<StateIndex>> forward(size);
  std::vector<std::vector<StateIndex>> backward(size);
  for (StateIndex p = 0; p < static_cast<StateIndex>(size); ++p) {
    for (Letter r = 1; r <= a.n(); ++r) {
      if (auto q = a.step(p, r)) {
        forward[p].push_back(*q);
        backward[*q].push_back(p);
        if (in_set[p] && !in_set[*q]) {
          throw InternalConsistencyError("arrow leaves the i = 1 states at " +
                                         to_string(a.state(p)));
        }
      }
    }
  }
  auto count = [](const std::vector<char>& v) {
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), 1));
  };
  const std::vector<StateIndex> root{out.front()};
  if (count(reach(forward, root, in_set)) != out.size() ||
      count(reach(backward, root, in_set)) != out.size()) {
    throw InternalConsistencyError("the i = 1 states are not strongly connected");
  }
  const std::vector<char> everything(size, 1);
  if (count(reach(backward, out, everything)) != size) {
    throw InternalConsistencyError(
        "some state cannot reach the i = 1 states; the closed class is not unique");
  }
  return out;
}

SparseBooleanMatrix recurrent_matrix(const Automaton& a) {
  const auto states = recurrent_states(a);
  std::vector<std::size_t> position(a.size(), a.size());
  for (std::size_t p = 0; p < states.size(); ++p) position[states[p]] = p;

  std::vector<SparseBooleanMatrix::Entry> entries;
  for (std::size_t p = 0; p < states.size(); ++p) {
    for (Letter r = 1; r <= a.n(); ++r) {
      if (auto q = a.step(states[p], r)) entries.push_back({p, position[*q]});
    }
  }
  SparseBooleanMatrix m(states.size(), std::move(entries));
  if (!primitivity_check(m)) {
    throw InternalConsistencyError("recurrent matrix for n=" + std::to_string(a.n()) +
                                   " is not primitive");
  }
  return m;
}

WordCounts count_words(const Automaton& a, int k) {
  if (k < 0) throw PreconditionError("word length must be nonnegative");
  const std::size_t size = a.size();
  std::vector<BigInt> current(size, 0);
  current[a.initial()] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<BigInt> next(size, 0);
    for (StateIndex p = 0; p < static_cast<StateIndex>(size); ++p) {
      if (current[p] == 0) continue;
      for (Letter r = 1; r <= a.n(); ++r) {
        if (auto q = a.step(p, r)) next[*q] += current[p];
      }
    }
    current = std::move(next);
  }

  WordCounts out;
  out.k = k;
  out.per_letter.assign(static_cast<std::size_t>(a.n()), 0);
  for (StateIndex p = 0; p < static_cast<StateIndex>(size); ++p) {
    out.total += current[p];
    if (k > 0) out.per_letter[a.final_letter(p) - 1] += current[p];
  }
  out.per_state = std::move(current);
  return out;
}

}  // namespace braidlex
