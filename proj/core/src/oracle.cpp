#include "braidlex/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_set>

#include "braidlex/errors.hpp"

namespace braidlex::oracle {
namespace {

// Words are handled internally as byte strings, one letter per char.
using Code = std::string;

Code encode(const Word& w) {
  Code out;
  out.reserve(w.size());
  for (Letter r : w.letters()) out.push_back(static_cast<char>(r));
  return out;
}

Word decode(int n, const Code& code) {
  std::vector<Letter> letters(code.begin(), code.end());
  return Word(n, std::move(letters));
}

// Calls visit(neighbor) for every word one relation application away.
template <typename Visit>
void for_each_neighbor(const Code& w, Visit&& visit) {
  const std::size_t len = w.size();
  for (std::size_t p = 0; p + 1 < len; ++p) {
    const int a = w[p];
    const int b = w[p + 1];
    if (std::abs(a - b) > 1) {
      Code next = w;
      std::swap(next[p], next[p + 1]);
      if (visit(next)) return;
    } else if (std::abs(a - b) == 1 && p + 2 < len && w[p + 2] == w[p]) {
      Code next = w;
      next[p] = static_cast<char>(b);
      next[p + 1] = static_cast<char>(a);
      next[p + 2] = static_cast<char>(b);
      if (visit(next)) return;
    }
  }
}

std::unordered_set<Code> closure(const Code& start) {
  std::unordered_set<Code> seen{start};
  std::deque<Code> queue{start};
  while (!queue.empty()) {
    Code w = std::move(queue.front());
    queue.pop_front();
    for_each_neighbor(w, [&](Code& next) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
      return false;
    });
  }
  return seen;
}

Code max_of(const std::unordered_set<Code>& cls) {
  return *std::max_element(cls.begin(), cls.end());
}

// Breadth-first search for a representative greater than `start`.
bool exceeds(const Code& start) {
  std::unordered_set<Code> seen{start};
  std::deque<Code> queue{start};
  bool found = false;
  while (!queue.empty() && !found) {
    Code w = std::move(queue.front());
    queue.pop_front();
    for_each_neighbor(w, [&](Code& next) {
      if (next > start) {
        found = true;
        return true;
      }
      if (seen.insert(next).second) queue.push_back(std::move(next));
      return false;
    });
  }
  return found;
}

bool has_run_or_pair_shape(const Word& w) {
  if (w.size() == 2 && w[0] == w[1] + 1) return true;
  for (std::size_t p = 1; p < w.size(); ++p) {
    if (w[p] != w[p - 1] + 1) return false;
  }
  return !w.is_empty();
}

}  // namespace

std::set<Word> equivalence_class(const Word& w) {
  std::set<Word> out;
  for (const Code& c : closure(encode(w))) out.insert(decode(w.n(), c));
  return out;
}

Word max_lex(const Word& w) { return decode(w.n(), max_of(closure(encode(w)))); }

bool has_greater_representative(const Word& w) { return exceeds(encode(w)); }

std::set<Word> enumerate_language(int n, int k) {
  if (n < 1) throw MalformedWord("generator count must be positive");
  if (k < 0) throw MalformedWord("negative word length");
  std::set<Word> out;
  std::unordered_set<Code> visited;
  Code w(static_cast<std::size_t>(k), char{1});
  while (true) {
    if (!visited.contains(w)) {
      auto cls = closure(w);
      out.insert(decode(n, max_of(cls)));
      visited.insert(cls.begin(), cls.end());
    }
    // Odometer increment over [1, n]^k.
    std::size_t p = w.size();
    while (p > 0 && w[p - 1] == n) {
      w[p - 1] = 1;
      --p;
    }
    if (p == 0) break;
    ++w[p - 1];
  }
  return out;
}

bool is_prefix(const Word& lhs, const Word& rhs) {
  if (lhs.n() != rhs.n()) throw MalformedWord("words over different n");
  if (lhs.size() > rhs.size()) return false;
  const auto left = closure(encode(lhs));
  for (const Code& u : closure(encode(rhs))) {
    if (left.contains(u.substr(0, lhs.size()))) return true;
  }
  return false;
}

std::set<Word> minimal_forbidden_prefixes(const Word& w) {
  ForbiddenPrefixSearch search(w.n());
  return search(w);
}

ForbiddenPrefixSearch::ForbiddenPrefixSearch(int n) : n_(n) {
  if (n < 1) throw MalformedWord("generator count must be positive");
}

const std::vector<Word>& ForbiddenPrefixSearch::candidates(std::size_t length) {
  auto it = candidates_.find(length);
  if (it != candidates_.end()) return it->second;
  const auto reps = enumerate_language(n_, static_cast<int>(length));
  return candidates_.emplace(length, std::vector<Word>(reps.begin(), reps.end()))
      .first->second;
}

std::set<Word> ForbiddenPrefixSearch::operator()(const Word& w) {
  if (w.n() != n_) throw MalformedWord("word over a different n");
  const Code base = max_of(closure(encode(w)));

  std::set<Word> minimal;
  // Every word representing some minimal element found so far.
  std::unordered_set<Code> minimal_words;

  const std::size_t bound = static_cast<std::size_t>(n_) + 1;
  for (std::size_t len = 1; len <= bound; ++len) {
    std::vector<Code> found;
    for (const Word& candidate : candidates(len)) {
      const Code c = encode(candidate);
      // A minimal element that is a proper prefix makes c non-minimal
      // whether or not c itself is forbidden.
      bool dominated = false;
      if (!minimal_words.empty()) {
        for (const Code& u : closure(c)) {
          for (std::size_t m = 1; m < len && !dominated; ++m) {
            dominated = minimal_words.contains(u.substr(0, m));
          }
          if (dominated) break;
        }
      }
      if (dominated) continue;
      if (exceeds(base + c)) found.push_back(c);
    }
    for (const Code& c : found) {
      minimal.insert(decode(n_, c));
      for (const Code& u : closure(c)) minimal_words.insert(u);
    }
  }

  for (const Word& f : minimal) {
    if (!has_run_or_pair_shape(f)) {
      throw InternalConsistencyError(
          "minimal forbidden prefix " + f.to_string() + " after " +
          w.to_string() + " is neither an increasing run nor a descending pair");
    }
  }
  return minimal;
}

}  // namespace braidlex::oracle
