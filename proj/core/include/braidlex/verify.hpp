#pragma once

// Cross-checks of the automaton against the brute-force oracle.

#include <cstddef>
#include <string>
#include <vector>

namespace braidlex {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string counterexample;  // first failing input, empty when passed
};

// For k = 0..max_len: accepted length-k words equal the max-lex language.
// For every accepted word up to max_len: oracle minimal forbidden prefixes
// equal psi of the reached state. Over all configurations: psi injective.
std::vector<VerifyCheck> verify_against_oracle(int n, int max_len);

// Pairwise distinctness of psi images over all_configs(n).
VerifyCheck check_psi_injective(int n);

}  // namespace braidlex
