#pragma once

// Brute-force model of the positive braid monoid A_n, straight from the
// presentation. Desk scale only: every operation enumerates equivalence
// classes of words explicitly.

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "braidlex/word.hpp"

namespace braidlex::oracle {

// Closure of {w} under the commutation relations a_i a_j = a_j a_i (|i-j|>1)
// and the braid relations a_i a_j a_i = a_j a_i a_j (|i-j|=1).
std::set<Word> equivalence_class(const Word& w);

// Lexicographically greatest representative of the braid of w.
Word max_lex(const Word& w);

// True iff some word equivalent to w is lexicographically greater than w,
// i.e. w is not its own max_lex. Stops at the first witness.
bool has_greater_representative(const Word& w);

// The length-k slice of the max-lex language.
std::set<Word> enumerate_language(int n, int k);

// Prefix order on braids: true iff the braid of lhs left-divides that of rhs.
bool is_prefix(const Word& lhs, const Word& rhs);

// Minimal forbidden prefixes after a braid, each element given as its
// max-lex representative. Search length bound is n + 1; every returned
// element is checked to be an increasing run a_i..a_k or a pair
// a_{j+1} a_j, otherwise InternalConsistencyError is thrown.
std::set<Word> minimal_forbidden_prefixes(const Word& w);

// Reusable form of minimal_forbidden_prefixes that caches the candidate
// braids per length. One instance per thread.
class ForbiddenPrefixSearch {
 public:
  explicit ForbiddenPrefixSearch(int n);

  int n() const noexcept { return n_; }
  std::set<Word> operator()(const Word& w);

 private:
  const std::vector<Word>& candidates(std::size_t length);

  int n_;
  std::map<std::size_t, std::vector<Word>> candidates_;
};

}  // namespace braidlex::oracle
