#include "braidlex/state_counts.hpp"

#include <limits>
#include <string>

#include "braidlex/errors.hpp"

namespace braidlex {

BigInt binomial2(int m) {
  if (m < 2) return 0;
  return BigInt(m) * (m - 1) / 2;
}

BigInt fibonacci(int index) {
  if (index < 0) throw PreconditionError("negative Fibonacci index");
  BigInt prev = 0;
  BigInt cur = 1;
  if (index == 0) return prev;
  for (int t = 1; t < index; ++t) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt state_count_recurrence(int n) {
  if (n < 0) throw PreconditionError("state count needs n >= 0");
  BigInt before = 0;  // s_{m-2}
  BigInt last = 1;    // s_{m-1}
  if (n == 0) return before;
  for (int m = 2; m <= n; ++m) {
    BigInt next = 3 * last - before + binomial2(m) + 1;
    before = std::move(last);
    last = std::move(next);
  }
  return last;
}

BigInt state_count_formula(int n) {
  if (n < 1) throw PreconditionError("state count formula needs n >= 1");
  BigInt total = 0;
  for (int i = 1; i <= n; ++i) {
    total += (binomial2(n + 1 - i) + 1) * fibonacci(2 * i);
  }
  return total;
}

StateCounts StateCounts::compute(int max_n) {
  if (max_n < 0) throw PreconditionError("negative max_n");
  StateCounts out;
  out.max_n = max_n;
  const BigInt limit = std::numeric_limits<std::int64_t>::max();
  for (int m = 0; m <= max_n; ++m) {
    BigInt s = state_count_recurrence(m);
    if (s > limit) {
      throw PreconditionError("s_" + std::to_string(m) + " overflows 64 bits");
    }
    out.s.push_back(static_cast<std::int64_t>(s));
    out.s_star.push_back(m == 0 ? 0 : out.s[m] - out.s[m - 1]);
  }
  for (int t = 0; t <= 2 * max_n; ++t) {
    out.fib.push_back(static_cast<std::int64_t>(fibonacci(t)));
  }
  return out;
}

}  // namespace braidlex
