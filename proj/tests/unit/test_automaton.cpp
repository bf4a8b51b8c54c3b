#include <doctest.h>

#include <braidlex/appendix.hpp>
#include <braidlex/automaton.hpp>
#include <braidlex/errors.hpp>
#include <braidlex/oracle.hpp>
#include <braidlex/state_counts.hpp>

#include <map>
#include <set>

#include "reference_values.hpp"
#include "test_support.hpp"

using namespace braidlex;

TEST_CASE("state count formulas") {
  CHECK(state_count_recurrence(2) == 5);
  CHECK(state_count_recurrence(5) == 161);
  CHECK(state_count_recurrence(19) == reference::kStateCount19);
  CHECK(state_count_formula(3) == 18);
  CHECK(state_count_formula(4) == 56);
  CHECK(state_count_formula(1) == 1);
  for (int n = 1; n <= 40; ++n) CHECK(state_count_formula(n) == state_count_recurrence(n));
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(10) == 55);
  CHECK(binomial2(4) == 6);

  const auto counts = StateCounts::compute(6);
  for (int n = 1; n <= 6; ++n) {
    CHECK(counts.s[n] == state_count_formula(n));
    CHECK(counts.s_star[n] == counts.s[n] - counts.s[n - 1]);
  }
}

TEST_CASE("build") {
  const auto a1 = Automaton::build(1);
  REQUIRE(a1.size() == 1);
  CHECK(a1.step(0, 1) == std::optional<StateIndex>(0));

  CHECK(Automaton::build(2).size() == 5);
  CHECK(Automaton::build(5).size() == 161);
  for (int n = 1; n <= 9; ++n) {
    CHECK(BigInt(Automaton::build(n).size()) == state_count_formula(n));
  }
  CHECK_THROWS_AS(Automaton::build(15), LimitExceeded);
  CHECK_THROWS_AS(Automaton::build(5, 4), LimitExceeded);
  CHECK_THROWS_AS(Automaton::build(0), PreconditionError);
}

TEST_CASE("states are exactly the valid configurations") {
  for (int n = 1; n <= 6; ++n) {
    const auto a = Automaton::build(n);
    const std::set<SegmentConfig> reached(a.states().begin(), a.states().end());
    const auto all = all_configs(n);
    CHECK(reached == std::set<SegmentConfig>(all.begin(), all.end()));
  }
}

TEST_CASE("acceptance of words") {
  const auto a = Automaton::build(2);
  CHECK(accepts(a, Word(2, {2, 1, 2})));
  CHECK_FALSE(accepts(a, Word(2, {1, 2, 1})));
  CHECK(accepts(a, Word::empty(2)));
  CHECK_THROWS_AS(accepts(a, Word(3, {1})), MalformedWord);
}

TEST_CASE("incoming arrows of a state share one label") {
  for (int n = 1; n <= 6; ++n) {
    const auto a = Automaton::build(n);
    for (StateIndex s = 0; s < static_cast<StateIndex>(a.size()); ++s) {
      for (Letter r = 1; r <= n; ++r) {
        if (auto t = a.step(s, r)) CHECK(a.final_letter(*t) == r);
      }
    }
  }
}

TEST_CASE("incidence matrices") {
  const auto a2 = Automaton::build(2);
  // states are numbered in discovery order; the reference layout is canonical
  const auto order = appendix::canonical_state_order(a2);
  const auto m2 =
      incidence_matrix(a2).reordered(std::vector<std::size_t>(order.begin(), order.end()));
  CHECK(m2.to_dense() == testing::dense(reference::kM2));
  CHECK(m2.row_sums() == std::vector<std::size_t>{2, 2, 1, 1, 2});
  CHECK(incidence_matrix(a2).nnz() == 8);
  CHECK(incidence_matrix(Automaton::build(1)).to_dense() ==
        testing::DenseBool{{1}});
}

TEST_CASE("recurrent states") {
  CHECK(recurrent_states(Automaton::build(1)).size() == 1);
  CHECK(recurrent_states(Automaton::build(2)).size() == 4);
  CHECK(recurrent_states(Automaton::build(3)).size() == 13);
  for (int n = 1; n <= 8; ++n) {
    const auto a = Automaton::build(n);
    for (StateIndex s : recurrent_states(a)) CHECK(a.state(s).i == 1);
  }
}

TEST_CASE("recurrent matrices") {
  const auto a2 = Automaton::build(2);
  CHECK(appendix::canonical_recurrent_matrix(a2).to_dense() == testing::dense(reference::kR2));
  CHECK(recurrent_matrix(a2).dim() == 4);
  CHECK(recurrent_matrix(Automaton::build(1)).to_dense() == testing::DenseBool{{1}});
  const auto r3 = recurrent_matrix(Automaton::build(3));
  CHECK(r3.dim() == 13);
  for (auto sum : r3.row_sums()) CHECK((sum >= 1 && sum <= 3));
  for (int n = 1; n <= 5; ++n) {
    CHECK(testing::primitive_by_powers(recurrent_matrix(Automaton::build(n))));
  }
}

TEST_CASE("states with i > 1 form a copy of the automaton one size down") {
  for (int n = 2; n <= 7; ++n) {
    const auto big = Automaton::build(n);
    const auto small = Automaton::build(n - 1);
    std::map<SegmentConfig, StateIndex> image;  // shifted config -> small index
    for (StateIndex s = 0; s < static_cast<StateIndex>(small.size()); ++s) {
      image.emplace(shift(small.state(s), n), s);
    }
    std::size_t transient = 0;
    for (StateIndex s = 0; s < static_cast<StateIndex>(big.size()); ++s) {
      const auto& c = big.state(s);
      if (c.i == 1) continue;
      ++transient;
      REQUIRE(image.contains(c));
      const StateIndex t = image.at(c);
      for (Letter r = 2; r <= n; ++r) {
        const auto next = big.step(s, r);
        const auto small_next = small.step(t, r - 1);
        REQUIRE(next.has_value() == small_next.has_value());
        if (next) CHECK(image.at(big.state(*next)) == *small_next);
      }
    }
    CHECK(transient == small.size());
  }
}

TEST_CASE("word counts") {
  const auto a2 = Automaton::build(2);
  const auto c50 = count_words(a2, 50);
  REQUIRE(c50.per_state.size() == 5);
  const auto order = appendix::canonical_state_order(a2);
  BigInt row_sum = 0;
  for (std::size_t p = 0; p < 5; ++p) {
    const BigInt expected(std::string(reference::kM2Power50Row[p]));
    CHECK(c50.per_state[order[p]] == expected);
    row_sum += expected;
  }
  CHECK(c50.total == row_sum);
  for (int n = 1; n <= 6; ++n) CHECK(count_words(Automaton::build(n), 1).total == n);
  CHECK(count_words(a2, 2).total == 4);
  const auto c0 = count_words(a2, 0);
  CHECK(c0.total == 1);
  CHECK(c0.per_state[0] == 1);
  CHECK_THROWS_AS(count_words(a2, -1), PreconditionError);
}

TEST_CASE("word counts agree with the oracle language") {
  for (int n = 1; n <= 4; ++n) {
    const auto a = Automaton::build(n);
    for (int k = 0; k <= 7; ++k) {
      const auto language = oracle::enumerate_language(n, k);
      const auto counts = count_words(a, k);
      CHECK(counts.total == language.size());
      std::vector<BigInt> by_letter(n, 0);
      for (const auto& w : language) {
        if (!w.is_empty()) by_letter[w[w.size() - 1] - 1] += 1;
      }
      CHECK(counts.per_letter == by_letter);
    }
  }
}
