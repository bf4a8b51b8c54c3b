#include "braidlex/segment_config.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "braidlex/diagram.hpp"
#include "braidlex/errors.hpp"

namespace braidlex {
namespace {

std::string violation(const SegmentConfig& c, int n, const std::string& what) {
  return "invalid segment configuration " + to_string(c) + " for n=" +
         std::to_string(n) + ": " + what;
}

// Empty string when valid, otherwise the first violated constraint.
std::string check(const SegmentConfig& c, int n) {
  if (n < 1) return "n must be positive";
  if (!(1 <= c.i && c.i <= c.j && c.j <= c.k && c.k <= n)) {
    return "requires 1 <= i <= j <= k <= n";
  }
  const auto& s = c.segments;
  const std::size_t t = s.size();
  if (t == 0) return {};
  if (s.front().left < c.i) return "first segment starts left of i";
  for (std::size_t r = 1; r < t; ++r) {
    if (s[r].left <= s[r - 1].left) return "segment starts not strictly increasing";
  }
  if (s.back().left >= c.j) return "last segment starts at or right of j";
  for (std::size_t r = 0; r + 1 < t; ++r) {
    if (s[r].right < c.k) return "non-final segment ends left of k";
    if (s[r].right > n) return "segment ends right of n";
    if (r > 0 && s[r].right > s[r - 1].right) return "segment ends not nested";
  }
  const int last = s.back().right;
  const int upper = t >= 2 ? s[t - 2].right : n;
  if (last != c.j && !(c.k <= last && last <= upper)) {
    return "last segment must end at j or within [k, previous end]";
  }
  return {};
}

Word run(int n, int from, int to) {
  std::vector<Letter> letters;
  for (int r = from; r <= to; ++r) letters.push_back(r);
  return Word(n, std::move(letters));
}

void check_shiftable(const SegmentConfig& c, int n) {
  int largest = c.k;
  for (const auto& seg : c.segments) largest = std::max(largest, seg.right);
  if (largest >= n) {
    throw ShiftRangeError("cannot shift " + to_string(c) + " into n=" +
                          std::to_string(n) + ": index " +
                          std::to_string(largest) + " would overflow");
  }
}

// Appends every valid continuation of the nested segment list.
void extend_segments(const SegmentConfig& base, int n, std::size_t next_left,
                     std::vector<Segment>& current,
                     std::vector<SegmentConfig>& out) {
  SegmentConfig c = base;
  c.segments = current;
  if (validate(c, n)) out.push_back(c);
  for (int left = static_cast<int>(next_left); left < base.j; ++left) {
    const int upper = current.empty() ? n : current.back().right;
    for (int right = base.j; right <= upper; ++right) {
      current.push_back({left, right});
      extend_segments(base, n, static_cast<std::size_t>(left + 1), current, out);
      current.pop_back();
    }
  }
}

int parse_int(std::string_view text, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("bad integer '" + std::string(text) + "' in config spec '" +
                     std::string(spec) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

SegmentConfig initial_config(int n) { return SegmentConfig{n, n, n, {}}; }

bool validate(const SegmentConfig& c, int n) { return check(c, n).empty(); }

void require_valid(const SegmentConfig& c, int n) {
  if (auto why = check(c, n); !why.empty()) {
    throw ValidationError(violation(c, n, why));
  }
}

std::set<Word> psi(const SegmentConfig& c, int n) {
  require_valid(c, n);
  std::set<Word> out;
  for (const auto& seg : c.segments) out.insert(run(n, seg.left, seg.right));
  for (int r = c.i; r <= n; ++r) {
    if (r == c.j || r == c.j + 1) continue;
    const bool starts_segment =
        std::any_of(c.segments.begin(), c.segments.end(),
                    [r](const Segment& s) { return s.left == r; });
    if (!starts_segment) out.insert(Word(n, {r}));
  }
  const int j = c.j;
  const int k = c.k;
  if (k == j && j < n) {
    out.insert(Word(n, {j + 1, j}));
  } else if (k == j + 1) {
    out.insert(Word(n, {j + 1}));
  } else if (k > j + 1) {
    out.insert(Word(n, {j + 1, j}));
    out.insert(run(n, j + 1, k));
  }
  return out;
}

std::vector<Letter> permitted_letters(const SegmentConfig& c, int n) {
  const Diagram d = to_diagram(c, n);
  std::vector<Letter> out;
  for (int r = 1; r <= n; ++r) {
    if (d.at(r) != Cell::Black) out.push_back(r);
  }
  return out;
}

SegmentConfig transition(const SegmentConfig& c, Letter r, int n) {
  const Diagram from = to_diagram(c, n);
  if (r < 1 || r > n) {
    throw ForbiddenLetter("letter " + std::to_string(r) + " outside [1, " +
                          std::to_string(n) + "]");
  }
  if (from.at(r) == Cell::Black) {
    throw ForbiddenLetter("a" + std::to_string(r) + " is forbidden after " +
                          to_string(c));
  }

  Diagram to;
  to.cells.assign(static_cast<std::size_t>(n), Cell::White);
  auto mark = [&](int position, Cell cell) { to.cells[position - 1] = cell; };

  mark(r, Cell::Square);
  for (int p = 1; p < r - 1; ++p) {
    if (from.at(p) == Cell::Black) mark(p, Cell::Black);
  }
  // A black circle at r-1 is the one-letter run [r-1, r-1]; it extends
  // like any other run ending at r-1.
  if (r >= 2 && from.at(r - 1) == Cell::Black) to.segments.push_back({r - 1, r});
  if (r >= 2 && from.at(r - 1) == Cell::Square) mark(r - 1, Cell::Black);
  for (const auto& seg : from.segments) {
    if (seg.right == r - 1) {
      to.segments.push_back({seg.left, r});
    } else if (seg.left < r && r <= seg.right) {
      to.segments.push_back(seg);
    } else if (seg.left == r) {
      if (r + 1 < seg.right) {
        to.segments.push_back({r + 1, seg.right});
      } else {
        mark(seg.right, Cell::Black);
      }
    }
  }
  for (int p = r + 2; p <= n; ++p) mark(p, Cell::Black);
  std::sort(to.segments.begin(), to.segments.end());

  return from_diagram(to);
}

SegmentConfig shift(const SegmentConfig& c, int n) {
  check_shiftable(c, n);
  SegmentConfig out{c.i + 1, c.j + 1, c.k + 1, c.segments};
  for (auto& seg : out.segments) {
    ++seg.left;
    ++seg.right;
  }
  return out;
}

SegmentConfig shift_black(const SegmentConfig& c, int n) {
  SegmentConfig out = shift(c, n);
  out.i = 1;
  return out;
}

std::vector<SegmentConfig> all_configs(int n) {
  std::vector<SegmentConfig> out;
  std::vector<Segment> current;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      for (int k = j; k <= n; ++k) {
        extend_segments(SegmentConfig{i, j, k, {}}, n,
                        static_cast<std::size_t>(i), current, out);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_config_spec(const SegmentConfig& c) {
  std::string out = std::to_string(c.i) + "," + std::to_string(c.j) + "," +
                    std::to_string(c.k) + ",[";
  for (std::size_t r = 0; r < c.segments.size(); ++r) {
    if (r > 0) out += ';';
    out += std::to_string(c.segments[r].left) + "-" +
           std::to_string(c.segments[r].right);
  }
  out += ']';
  return out;
}

SegmentConfig parse_config_spec(std::string_view text) {
  SegmentConfig c;
  std::string_view rest = text;
  int* fields[] = {&c.i, &c.j, &c.k};
  for (int* field : fields) {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("config spec '" + std::string(text) +
                       "' needs the form i,j,k,[p-q;...]");
    }
    *field = parse_int(trim(rest.substr(0, comma)), text);
    rest.remove_prefix(comma + 1);
  }
  rest = trim(rest);
  if (rest.empty()) return c;
  if (rest.front() != '[' || rest.back() != ']') {
    throw ParseError("segment list must be bracketed in '" + std::string(text) + "'");
  }
  rest = trim(rest.substr(1, rest.size() - 2));
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    std::string_view item = trim(rest.substr(0, semi));
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw ParseError("segment '" + std::string(item) + "' needs the form p-q");
    }
    c.segments.push_back({parse_int(trim(item.substr(0, dash)), text),
                          parse_int(trim(item.substr(dash + 1)), text)});
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  return c;
}

std::string to_string(const SegmentConfig& c) {
  std::string out = "(" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
                    std::to_string(c.k) + ",{";
  for (std::size_t r = 0; r < c.segments.size(); ++r) {
    if (r > 0) out += ',';
    out += "[" + std::to_string(c.segments[r].left) + "," +
           std::to_string(c.segments[r].right) + "]";
  }
  return out + "})";
}

}  // namespace braidlex

std::size_t std::hash<braidlex::SegmentConfig>::operator()(
    const braidlex::SegmentConfig& c) const noexcept {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](int v) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(c.i);
  mix(c.j);
  mix(c.k);
  for (const auto& seg : c.segments) {
    mix(seg.left);
    mix(seg.right);
  }
  return h;
}
