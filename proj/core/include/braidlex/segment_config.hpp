#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "braidlex/word.hpp"

namespace braidlex {

// Closed integer interval [left, right] of generator positions.
struct Segment {
  int left = 0;
  int right = 0;

  friend auto operator<=>(const Segment&, const Segment&) = default;
};

// A segment configuration (i, j, k, S): the canonical name of a state of the
// automaton. S is kept sorted by strictly increasing left endpoint.
//
// Constraints for ambient n:
//   1 <= i <= j <= k <= n
//   i <= i_1 < i_2 < ... < i_t < j <= k <= j_{t-1} <= ... <= j_1 <= n
//   j_t = j  or  k <= j_t <= j_{t-1}
struct SegmentConfig {
  int i = 1;
  int j = 1;
  int k = 1;
  std::vector<Segment> segments;

  friend auto operator<=>(const SegmentConfig&, const SegmentConfig&) = default;
};

// The initial state (n, n, n, {}).
SegmentConfig initial_config(int n);

bool validate(const SegmentConfig& c, int n);
// Throws ValidationError naming the violated constraint.
void require_valid(const SegmentConfig& c, int n);

// The set of forbidden braids encoded by c: the runs a_{i_r}..a_{j_r}, the
// singletons a_r (i <= r <= n, r not a segment start, r != j, j+1), and
// U_{j,k}.
std::set<Word> psi(const SegmentConfig& c, int n);

// Letters r with no black circle at r in the diagram of c.
std::vector<Letter> permitted_letters(const SegmentConfig& c, int n);

// Target of the arrow labeled a_r out of c. Throws ForbiddenLetter when a_r
// is not permitted.
SegmentConfig transition(const SegmentConfig& c, Letter r, int n);

// Label of every arrow entering c: the square position j.
inline int final_letter(const SegmentConfig& c) noexcept { return c.j; }

// Raise every index by one (prepend a white circle). The result lives in
// ambient n; throws ShiftRangeError if c mentions an index >= n.
SegmentConfig shift(const SegmentConfig& c, int n);
// As shift, then set i = 1 (prepend a black circle).
SegmentConfig shift_black(const SegmentConfig& c, int n);

// Every valid configuration for n, ordered lexicographically on (i, j, k, S).
std::vector<SegmentConfig> all_configs(int n);

// Config-spec text "i,j,k,[p1-q1;p2-q2]"; the bracket may be empty or
// omitted entirely ("1,1,1,").
std::string format_config_spec(const SegmentConfig& c);
SegmentConfig parse_config_spec(std::string_view text);

// "(1,2,2,{[1,2]})"
std::string to_string(const SegmentConfig& c);

}  // namespace braidlex

template <>
struct std::hash<braidlex::SegmentConfig> {
  std::size_t operator()(const braidlex::SegmentConfig& c) const noexcept;
};
