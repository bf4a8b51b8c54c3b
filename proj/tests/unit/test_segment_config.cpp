#include <doctest.h>

#include <braidlex/diagram.hpp>
#include <braidlex/errors.hpp>
#include <braidlex/oracle.hpp>
#include <braidlex/segment_config.hpp>
#include <braidlex/verify.hpp>

#include <algorithm>
#include <set>

using namespace braidlex;

namespace {
SegmentConfig cfg(int i, int j, int k, std::vector<Segment> s = {}) {
  return SegmentConfig{i, j, k, std::move(s)};
}
}  // namespace

TEST_CASE("validation") {
  for (int n = 1; n <= 6; ++n) CHECK(validate(initial_config(n), n));
  CHECK(validate(cfg(1, 2, 2, {{1, 2}}), 2));
  CHECK_FALSE(validate(cfg(1, 2, 3, {{2, 3}}), 3));
  CHECK_FALSE(validate(cfg(2, 1, 1), 2));
  CHECK_FALSE(validate(cfg(1, 1, 3), 2));
  CHECK_FALSE(validate(cfg(0, 1, 1), 2));
  // left endpoints must increase strictly
  CHECK_FALSE(validate(cfg(1, 3, 3, {{1, 3}, {1, 3}}), 3));
  CHECK_THROWS_AS(require_valid(cfg(1, 2, 3, {{2, 3}}), 3), ValidationError);
}

TEST_CASE("psi images") {
  for (int n = 1; n <= 5; ++n) CHECK(psi(initial_config(n), n).empty());
  CHECK(psi(cfg(1, 1, 1), 2) == std::set<Word>{Word(2, {2, 1})});
  CHECK(psi(cfg(1, 2, 2), 2) == std::set<Word>{Word(2, {1})});
  CHECK(psi(cfg(1, 2, 2, {{1, 2}}), 2) == std::set<Word>{Word(2, {1, 2})});
  CHECK(psi(cfg(1, 1, 2), 2) == std::set<Word>{Word(2, {2})});
  CHECK(psi(cfg(1, 1, 3), 3) ==
        std::set<Word>{Word(3, {2, 1}), Word(3, {2, 3}), Word(3, {3})});
  CHECK_THROWS_AS(psi(cfg(1, 2, 3, {{2, 3}}), 3), ValidationError);
}

TEST_CASE("permitted letters") {
  CHECK(permitted_letters(initial_config(4), 4) == std::vector<Letter>{1, 2, 3, 4});
  CHECK(permitted_letters(cfg(1, 2, 2), 2) == std::vector<Letter>{2});
  CHECK(permitted_letters(cfg(1, 1, 1), 2) == std::vector<Letter>{1, 2});
  // permitted exactly when the single letter is not in psi
  for (int n = 1; n <= 5; ++n) {
    for (const auto& c : all_configs(n)) {
      const auto image = psi(c, n);
      const auto allowed = permitted_letters(c, n);
      for (Letter r = 1; r <= n; ++r) {
        const bool listed = std::ranges::find(allowed, r) != allowed.end();
        CHECK(listed == !image.contains(Word(n, {r})));
      }
    }
  }
}

TEST_CASE("transitions") {
  CHECK(transition(cfg(2, 2, 2), 1, 2) == cfg(1, 1, 1));
  CHECK(transition(cfg(2, 2, 2), 2, 2) == cfg(2, 2, 2));
  CHECK(transition(cfg(1, 2, 2), 2, 2) == cfg(1, 2, 2, {{1, 2}}));
  CHECK_THROWS_AS(transition(cfg(1, 2, 2), 1, 2), ForbiddenLetter);
  CHECK_THROWS_AS(transition(cfg(2, 2, 2), 3, 2), ForbiddenLetter);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& c : all_configs(n)) {
      for (Letter r : permitted_letters(c, n)) {
        const auto next = transition(c, r, n);
        CHECK(validate(next, n));
        CHECK(final_letter(next) == r);
      }
    }
  }
}

TEST_CASE("final letter") {
  CHECK(final_letter(cfg(1, 1, 1)) == 1);
  CHECK(final_letter(cfg(1, 2, 2, {{1, 2}})) == 2);
  CHECK(final_letter(cfg(1, 1, 2)) == 1);
}

TEST_CASE("shifts") {
  CHECK(shift(cfg(1, 1, 1), 2) == cfg(2, 2, 2));
  CHECK(shift_black(cfg(1, 1, 1), 2) == cfg(1, 2, 2));
  CHECK(shift_black(cfg(1, 1, 2), 3) == cfg(1, 2, 3));
  CHECK(shift(cfg(1, 2, 2, {{1, 2}}), 3) == cfg(2, 3, 3, {{2, 3}}));
  CHECK_THROWS_AS(shift(cfg(1, 2, 2), 2), ShiftRangeError);
  CHECK_THROWS_AS(shift_black(cfg(2, 2, 2), 2), ShiftRangeError);
  // shift preserves validity one size up
  for (int n = 1; n <= 4; ++n) {
    for (const auto& c : all_configs(n)) {
      CHECK(validate(shift(c, n + 1), n + 1));
      CHECK(validate(shift_black(c, n + 1), n + 1));
    }
  }
}

TEST_CASE("configuration counts") {
  const std::vector<std::size_t> expected{1, 5, 18, 56, 161};
  for (int n = 1; n <= 5; ++n) CHECK(all_configs(n).size() == expected[n - 1]);
}

TEST_CASE("diagram round trip") {
  CHECK(from_diagram(to_diagram(cfg(2, 2, 2), 2)) == cfg(2, 2, 2));
  CHECK(from_diagram(to_diagram(cfg(1, 2, 2, {{1, 2}}), 2)) == cfg(1, 2, 2, {{1, 2}}));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& c : all_configs(n)) CHECK(from_diagram(to_diagram(c, n)) == c);
  }
}

TEST_CASE("diagram rendering and malformed diagrams") {
  CHECK(render_diagram(to_diagram(cfg(1, 1, 1), 2)) == "# o\n");
  CHECK(render_diagram(to_diagram(cfg(2, 2, 2), 2)) == "o #\n");
  CHECK(render_diagram(to_diagram(cfg(1, 2, 2, {{1, 2}}), 2)) == "---\no #\n");

  Diagram none{{Cell::White, Cell::White}, {}};
  CHECK_THROWS_AS(from_diagram(none), ParseError);
  Diagram two{{Cell::Square, Cell::Square}, {}};
  CHECK_THROWS_AS(from_diagram(two), ParseError);
}

TEST_CASE("config spec strings") {
  CHECK(parse_config_spec("1,1,1,") == cfg(1, 1, 1));
  CHECK(parse_config_spec("2,2,2,[]") == cfg(2, 2, 2));
  CHECK(parse_config_spec("1,2,2,[1-2]") == cfg(1, 2, 2, {{1, 2}}));
  CHECK(to_string(cfg(1, 2, 2, {{1, 2}})) == "(1,2,2,{[1,2]})");
  for (const auto& c : all_configs(4)) CHECK(parse_config_spec(format_config_spec(c)) == c);
  CHECK_THROWS_AS(parse_config_spec("1,2"), ParseError);
  CHECK_THROWS_AS(parse_config_spec("1,x,2,"), ParseError);
  CHECK_THROWS_AS(parse_config_spec("1,2,2,[1-]"), ParseError);
}

TEST_CASE("psi is injective") {
  for (int n = 1; n <= 5; ++n) {
    const auto check = check_psi_injective(n);
    CHECK_MESSAGE(check.passed, check.counterexample);
  }
}

TEST_CASE("psi agrees with the oracle along transitions") {
  for (int n = 1; n <= 3; ++n) {
    oracle::ForbiddenPrefixSearch search(n);
    for (int k = 0; k <= 4; ++k) {
      for (const auto& w : oracle::enumerate_language(n, k)) {
        SegmentConfig c = initial_config(n);
        for (Letter r : w.letters()) c = transition(c, r, n);
        CHECK(psi(c, n) == search(w));
      }
    }
  }
}
