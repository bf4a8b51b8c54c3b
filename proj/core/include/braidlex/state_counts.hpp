#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidlex {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial2(int m);
BigInt fibonacci(int index);

// s_0 = 0, s_1 = 1, s_n = 3 s_{n-1} - s_{n-2} + C(n,2) + 1.
BigInt state_count_recurrence(int n);
// s_n = sum_{i=1..n} (C(n+1-i, 2) + 1) F_{2i}.
BigInt state_count_formula(int n);

// Precomputed state counts for n = 0..max_n in machine integers.
struct StateCounts {
  int max_n = 0;
  std::vector<std::int64_t> s;       // s[0..max_n]
  std::vector<std::int64_t> s_star;  // s_star[m] = s[m] - s[m-1]; s_star[0] = 0
  std::vector<std::int64_t> fib;     // F_0..F_{2 max_n}

  static StateCounts compute(int max_n);
};

}  // namespace braidlex
