#pragma once

#include <string>
#include <vector>

#include "braidlex/segment_config.hpp"

namespace braidlex {

enum class Cell : char { White = 'o', Black = '*', Square = '#' };

// Diagram of a segment configuration. cells[r - 1] is the mark at position r.
// A black circle at r means the single letter a_r is forbidden; a segment
// [p, q] (p < q) means the run a_p..a_q is forbidden. The pair a_{j+1} a_j is
// implicit and never drawn.
struct Diagram {
  std::vector<Cell> cells;
  std::vector<Segment> segments;  // sorted by left endpoint

  int n() const noexcept { return static_cast<int>(cells.size()); }
  Cell at(int position) const { return cells.at(position - 1); }
  bool has_segment(int left, int right) const;
  // The segment starting at `left`, if any; right endpoint or 0.
  int segment_from(int left) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram to_diagram(const SegmentConfig& c, int n);
// Throws ParseError on zero or several squares or overlapping segment starts.
SegmentConfig from_diagram(const Diagram& d);

// Fixed-width text rendering. Cells are separated by single spaces; each
// segment is drawn as a run of '-' spanning its endpoint columns on a line
// above the cell row, outermost segments on top, one line per nesting depth.
//
//   ---
//   o #
std::string render_diagram(const Diagram& d);

}  // namespace braidlex
