#include "braidlex/diagram.hpp"

#include <algorithm>
#include <string>

#include "braidlex/errors.hpp"

namespace braidlex {

bool Diagram::has_segment(int left, int right) const {
  return std::find(segments.begin(), segments.end(), Segment{left, right}) !=
         segments.end();
}

int Diagram::segment_from(int left) const {
  for (const auto& seg : segments) {
    if (seg.left == left) return seg.right;
  }
  return 0;
}

Diagram to_diagram(const SegmentConfig& c, int n) {
  require_valid(c, n);
  Diagram d;
  d.cells.assign(static_cast<std::size_t>(n), Cell::White);
  d.segments = c.segments;
  for (int r = c.i; r <= n; ++r) {
    if (r == c.j || r == c.j + 1 || d.segment_from(r) != 0) continue;
    d.cells[r - 1] = Cell::Black;
  }
  d.cells[c.j - 1] = Cell::Square;
  if (c.k == c.j + 1) {
    d.cells[c.k - 1] = Cell::Black;
  } else if (c.k > c.j + 1) {
    d.segments.push_back({c.j + 1, c.k});
  }
  std::sort(d.segments.begin(), d.segments.end());
  return d;
}

SegmentConfig from_diagram(const Diagram& d) {
  const int n = d.n();
  if (n < 1) throw ParseError("empty diagram");
  const auto squares = std::count(d.cells.begin(), d.cells.end(), Cell::Square);
  if (squares != 1) {
    throw ParseError("diagram must have exactly one square, found " +
                     std::to_string(squares));
  }
  for (const auto& seg : d.segments) {
    if (seg.left < 1 || seg.right > n || seg.left >= seg.right) {
      throw ParseError("segment out of range in diagram");
    }
  }

  SegmentConfig c;
  c.j = static_cast<int>(std::find(d.cells.begin(), d.cells.end(), Cell::Square) -
                         d.cells.begin()) + 1;
  if (c.j == n) {
    c.k = n;
  } else if (d.at(c.j + 1) == Cell::Black) {
    c.k = c.j + 1;
  } else if (int right = d.segment_from(c.j + 1); right != 0) {
    c.k = right;
  } else {
    c.k = c.j;
  }
  c.i = c.j;
  for (int p = 1; p < c.j; ++p) {
    if (d.at(p) == Cell::Black || d.segment_from(p) != 0) {
      c.i = p;
      break;
    }
  }
  for (const auto& seg : d.segments) {
    if (seg.left < c.j) c.segments.push_back(seg);
  }
  std::sort(c.segments.begin(), c.segments.end());

  if (!validate(c, n) || to_diagram(c, n) != d) {
    throw ParseError("diagram does not encode a segment configuration (closest: " +
                     to_string(c) + ")");
  }
  return c;
}

std::string render_diagram(const Diagram& d) {
  const std::size_t width = d.cells.empty() ? 0 : 2 * d.cells.size() - 1;

  // Longest first, each on the highest line where it does not touch another.
  std::vector<Segment> order = d.segments;
  std::stable_sort(order.begin(), order.end(), [](const Segment& a, const Segment& b) {
    return a.right - a.left > b.right - b.left;
  });
  std::vector<std::string> lines;
  for (const auto& seg : order) {
    const std::size_t from = 2 * static_cast<std::size_t>(seg.left - 1);
    const std::size_t to = 2 * static_cast<std::size_t>(seg.right - 1);
    auto free = [&](const std::string& line) {
      const std::size_t lo = from == 0 ? 0 : from - 1;
      const std::size_t hi = std::min(width - 1, to + 1);
      for (std::size_t x = lo; x <= hi; ++x) {
        if (line[x] != ' ') return false;
      }
      return true;
    };
    auto it = std::find_if(lines.begin(), lines.end(), free);
    if (it == lines.end()) it = lines.insert(lines.end(), std::string(width, ' '));
    std::fill(it->begin() + static_cast<std::ptrdiff_t>(from),
              it->begin() + static_cast<std::ptrdiff_t>(to) + 1, '-');
  }

  std::string out;
  for (auto& line : lines) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  for (std::size_t r = 0; r < d.cells.size(); ++r) {
    if (r > 0) out += ' ';
    out += static_cast<char>(d.cells[r]);
  }
  out += '\n';
  return out;
}

}  // namespace braidlex
