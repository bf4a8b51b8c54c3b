#include "braidlex/appendix.hpp"

#include <string>

#include "braidlex/errors.hpp"

namespace braidlex::appendix {
namespace {

std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

// The copy of a recurrent configuration for A_m sitting under the segment
// [1, m+1] inside A_n.
SegmentConfig under_segment(const SegmentConfig& c, int m, int n) {
  SegmentConfig out = shift(c, m + 1);
  out.i = 1;
  out.segments.insert(out.segments.begin(), Segment{1, m + 1});
  require_valid(out, n);
  return out;
}

const std::vector<SegmentConfig>& recurrent_order(
    int n, std::vector<std::vector<SegmentConfig>>& cache) {
  if (cache.size() <= static_cast<std::size_t>(n)) cache.resize(n + 1);
  auto& out = cache[n];
  if (!out.empty()) return out;

  for (int k = 1; k <= n; ++k) out.push_back(SegmentConfig{1, 1, k, {}});
  if (n == 1) return out;
  // Copy first: the recursive call may reallocate the cache.
  const std::vector<SegmentConfig> inner = recurrent_order(n - 1, cache);
  std::vector<SegmentConfig> tail;
  for (const auto& c : inner) tail.push_back(shift_black(c, n));
  for (int m = 1; m <= n - 1; ++m) {
    const std::vector<SegmentConfig> block = recurrent_order(m, cache);
    for (const auto& c : block) tail.push_back(under_segment(c, m, n));
    for (int k = m + 2; k <= n; ++k) {
      tail.push_back(SegmentConfig{1, m + 1, k, {{1, m + 1}}});
    }
  }
  auto& slot = cache[n];
  slot.insert(slot.end(), tail.begin(), tail.end());
  return slot;
}

std::vector<StateIndex> locate(const Automaton& a,
                               const std::vector<SegmentConfig>& configs) {
  std::vector<StateIndex> out;
  std::vector<char> used(a.size(), 0);
  out.reserve(configs.size());
  for (const auto& c : configs) {
    auto s = a.find(c);
    if (!s) {
      throw InternalConsistencyError("canonical config " + to_string(c) +
                                     " is not a state for n=" + std::to_string(a.n()));
    }
    if (used[*s]) {
      throw InternalConsistencyError("canonical order repeats " + to_string(c));
    }
    used[*s] = 1;
    out.push_back(*s);
  }
  return out;
}

}  // namespace

HVector compute_H(int j, const StateCounts& counts) {
  if (j < 1) throw PreconditionError("H needs j >= 1");
  if (counts.max_n < j) throw PreconditionError("state counts do not reach j");
  HVector h{j, {0}};
  for (int i = 2; i <= j; ++i) {
    const std::int64_t x = counts.s_star[i] - counts.s_star[i - 1] - i;
    const std::size_t half = h.values.size();
    for (std::size_t p = 0; p < half; ++p) h.values.push_back(h.values[p] + x);
  }
  return h;
}

void submatrix(CoordinateBuilder& r, int j, const HVector& h, std::int64_t s,
               bool closed, const StateCounts& counts) {
  if (j < 1) return;
  auto star = [&](int m) { return counts.s_star.at(m); };
  auto hk = [&](std::int64_t one_based) {
    return h.values.at(static_cast<std::size_t>(one_based - 1));
  };

  if (closed) {
    for (int i = 1; i <= j; ++i) r.set_one_based(i + s, 1 + s);
  } else {
    for (int i = 1; i <= j; ++i) r.set_one_based(i + s, 1 + star(j) + s);
  }
  if (j > 1) r.set_one_based(1 + s, j + 1 + s);
  for (int i = 3; i <= j; ++i) r.set_one_based(i + s, j + i - 1 + s);

  submatrix(r, j - 1, h, s + j, false, counts);

  std::int64_t sp = s + j + star(j - 1);
  for (int i = 1; i <= j - 1; ++i) {
    submatrix(r, i, h, sp, true, counts);
    if (i == 1) {
      for (int k = 1; k <= j - 2; ++k) r.set_one_based(sp + 1 + k, sp + 1);
    } else {
      for (int k = 1; k <= j - i - 1; ++k) {
        r.set_one_based(sp + star(i) + k, sp + choose2(i + 1) + 1);
      }
    }
    for (int k = 2; k <= j - i - 1; ++k) {
      r.set_one_based(sp + star(i) + k, sp + star(i) + k + star(i + 1) + j - i - 2);
    }
    const std::int64_t block_end = sp + star(i) + j - i - 1;
    const std::int64_t target = closed ? s + i + 1 : s + star(j) + i + 1;
    for (std::int64_t k = sp + 1; k <= block_end; ++k) r.set_one_based(k, target);
    if (i < j - 1) {
      for (std::int64_t k = 1; k <= (std::int64_t{1} << (i - 1)); ++k) {
        r.set_one_based(sp + choose2(i + 1) + hk(k),
                        sp + star(i) + j - i - 1 + choose2(i + 2) + hk(2 * k - 1));
      }
    }
    sp = block_end;
  }
}

SparseBooleanMatrix build_R_direct(int n) {
  if (n < 1) throw PreconditionError("R_n needs n >= 1");
  const StateCounts counts = StateCounts::compute(n);
  const HVector h = n >= 2 ? compute_H(n - 1, counts) : HVector{1, {0}};
  CoordinateBuilder r(static_cast<std::size_t>(counts.s_star[n]));
  submatrix(r, n, h, 0, true, counts);
  return std::move(r).build();
}

std::vector<SegmentConfig> canonical_recurrent_configs(int n) {
  if (n < 1) throw PreconditionError("canonical order needs n >= 1");
  std::vector<std::vector<SegmentConfig>> cache;
  return recurrent_order(n, cache);
}

std::vector<SegmentConfig> canonical_configs(int n) {
  if (n < 1) throw PreconditionError("canonical order needs n >= 1");
  std::vector<std::vector<SegmentConfig>> cache;
  std::vector<SegmentConfig> out{SegmentConfig{1, 1, 1, {}}};
  for (int m = 2; m <= n; ++m) {
    std::vector<SegmentConfig> next;
    next.reserve(out.size());
    for (const auto& c : out) next.push_back(shift(c, m));
    const auto& rec = recurrent_order(m, cache);
    next.insert(next.end(), rec.begin(), rec.end());
    out = std::move(next);
  }
  return out;
}

std::vector<StateIndex> canonical_ordering(const Automaton& a) {
  auto out = locate(a, canonical_recurrent_configs(a.n()));
  for (StateIndex s : out) {
    if (a.state(s).i != 1) {
      throw InternalConsistencyError("canonical recurrent order hits a transient state");
    }
  }
  return out;
}

std::vector<StateIndex> canonical_state_order(const Automaton& a) {
  auto out = locate(a, canonical_configs(a.n()));
  if (out.size() != a.size()) {
    throw InternalConsistencyError("canonical order covers " +
                                   std::to_string(out.size()) + " of " +
                                   std::to_string(a.size()) + " states");
  }
  return out;
}

SparseBooleanMatrix canonical_recurrent_matrix(const Automaton& a) {
  const auto states = recurrent_states(a);
  std::vector<std::size_t> position(a.size(), a.size());
  for (std::size_t p = 0; p < states.size(); ++p) position[states[p]] = p;
  const auto canonical = canonical_ordering(a);
  if (canonical.size() != states.size()) {
    throw InternalConsistencyError("canonical order covers " +
                                   std::to_string(canonical.size()) + " of " +
                                   std::to_string(states.size()) +
                                   " recurrent states");
  }
  std::vector<std::size_t> order;
  order.reserve(canonical.size());
  for (StateIndex s : canonical) order.push_back(position[s]);
  return recurrent_matrix(a).reordered(order);
}

SparseBooleanMatrix canonical_incidence_matrix(const Automaton& a) {
  const auto canonical = canonical_state_order(a);
  std::vector<std::size_t> order(canonical.begin(), canonical.end());
  return incidence_matrix(a).reordered(order);
}

}  // namespace braidlex::appendix
