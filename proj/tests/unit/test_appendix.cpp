#include <doctest.h>

#include <braidlex/appendix.hpp>
#include <braidlex/automaton.hpp>
#include <braidlex/errors.hpp>
#include <braidlex/spectral.hpp>

#include <algorithm>
#include <cmath>
#include <set>

#include "reference_values.hpp"
#include "test_support.hpp"

using namespace braidlex;

TEST_CASE("H vector") {
  const auto counts = StateCounts::compute(13);
  CHECK(appendix::compute_H(1, counts).values == std::vector<std::int64_t>{0});
  CHECK(appendix::compute_H(3, counts).values == std::vector<std::int64_t>{0, 1, 6, 7});
  CHECK(appendix::compute_H(4, counts).values ==
        std::vector<std::int64_t>{0, 1, 6, 7, 21, 22, 27, 28});
  for (int j = 2; j <= 12; ++j) {
    const auto h = appendix::compute_H(j, counts);
    const auto lower = appendix::compute_H(j - 1, counts);
    REQUIRE(h.values.size() == (std::size_t{1} << (j - 1)));
    CHECK(std::equal(lower.values.begin(), lower.values.end(), h.values.begin()));
    CHECK(std::ranges::is_sorted(h.values));
    CHECK(std::ranges::adjacent_find(h.values) == h.values.end());
  }
}

TEST_CASE("submatrix base cases") {
  const auto counts = StateCounts::compute(3);
  const auto h = appendix::compute_H(1, counts);
  {
    CoordinateBuilder b(1);
    appendix::submatrix(b, 1, h, 0, true, counts);
    CHECK(std::move(b).build().to_dense() == testing::DenseBool{{1}});
  }
  {
    CoordinateBuilder b(2);
    appendix::submatrix(b, 1, h, 0, false, counts);
    CHECK(std::move(b).build().to_dense() == testing::DenseBool{{0, 1}, {0, 0}});
  }
  {
    CoordinateBuilder b(4);
    appendix::submatrix(b, 2, appendix::compute_H(1, counts), 0, true, counts);
    CHECK(std::move(b).build().to_dense() == testing::dense(reference::kR2));
  }
  {
    CoordinateBuilder b(1);
    CHECK_THROWS_AS(appendix::submatrix(b, 1, h, 0, false, counts), IndexError);
  }
}

TEST_CASE("direct generation of small matrices") {
  CHECK(appendix::build_R_direct(1).to_dense() == testing::DenseBool{{1}});
  CHECK(appendix::build_R_direct(2).to_dense() == testing::dense(reference::kR2));
  CHECK_THROWS_AS(appendix::build_R_direct(0), PreconditionError);
}

TEST_CASE("canonical ordering") {
  using C = SegmentConfig;
  CHECK(appendix::canonical_recurrent_configs(1) == std::vector<C>{C{1, 1, 1, {}}});
  CHECK(appendix::canonical_recurrent_configs(2) ==
        std::vector<C>{C{1, 1, 1, {}}, C{1, 1, 2, {}}, C{1, 2, 2, {}},
                       C{1, 2, 2, {{1, 2}}}});
  const auto three = appendix::canonical_recurrent_configs(3);
  REQUIRE(three.size() == 13);
  CHECK(three[0] == C{1, 1, 1, {}});
  CHECK(three[1] == C{1, 1, 2, {}});
  CHECK(three[2] == C{1, 1, 3, {}});

  for (int n = 1; n <= 7; ++n) {
    const auto a = Automaton::build(n);
    const auto order = appendix::canonical_ordering(a);
    const auto recurrent = recurrent_states(a);
    CHECK(std::set<StateIndex>(order.begin(), order.end()) ==
          std::set<StateIndex>(recurrent.begin(), recurrent.end()));
    CHECK(order.size() == recurrent.size());
    const auto full = appendix::canonical_state_order(a);
    CHECK(full.size() == a.size());
    CHECK(std::set<StateIndex>(full.begin(), full.end()).size() == a.size());
  }
  CHECK(appendix::canonical_incidence_matrix(Automaton::build(2)).to_dense() ==
        testing::dense(reference::kM2));
}

TEST_CASE("direct generation matches the breadth-first automaton") {
  for (int n = 1; n <= 7; ++n) {
    const auto a = Automaton::build(n);
    const auto direct = appendix::build_R_direct(n);
    const auto bfs = appendix::canonical_recurrent_matrix(a);
    const auto mismatch = first_mismatch(direct, bfs);
    CHECK_MESSAGE(!mismatch, "n=" << n << " first mismatch at (" << mismatch->row << ","
                                  << mismatch->col << ")");
  }
}

TEST_CASE("characteristic data is ordering independent") {
  for (int n = 2; n <= 6; ++n) {
    const auto direct = appendix::build_R_direct(n);
    const auto bfs = recurrent_matrix(Automaton::build(n));
    CHECK(direct.dim() == bfs.dim());
    CHECK(direct.nnz() == bfs.nnz());
    auto sorted = [](std::vector<std::size_t> v) {
      std::ranges::sort(v);
      return v;
    };
    CHECK(sorted(direct.row_sums()) == sorted(bfs.row_sums()));
    CHECK(sorted(direct.col_sums()) == sorted(bfs.col_sums()));
    CHECK(std::abs(perron(direct).lambda - perron(bfs).lambda) < 1e-10);
  }
}
