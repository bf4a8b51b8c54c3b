#include "braidlex/verify.hpp"

#include <map>
#include <set>

#include "braidlex/automaton.hpp"
#include "braidlex/errors.hpp"
#include "braidlex/oracle.hpp"
#include "braidlex/segment_config.hpp"

namespace braidlex {
namespace {

// Accepted words of each length, by depth-first walk of the automaton.
std::vector<std::vector<Word>> accepted_by_length(const Automaton& a, int max_len) {
  std::vector<std::vector<Word>> out(static_cast<std::size_t>(max_len) + 1);
  std::vector<Letter> letters;
  auto walk = [&](auto&& self, StateIndex s) -> void {
    out[letters.size()].emplace_back(a.n(), letters);
    if (static_cast<int>(letters.size()) == max_len) return;
    for (Letter r = 1; r <= a.n(); ++r) {
      if (auto t = a.step(s, r)) {
        letters.push_back(r);
        self(self, *t);
        letters.pop_back();
      }
    }
  };
  walk(walk, a.initial());
  return out;
}

std::string describe(const std::set<Word>& words) {
  std::string out = "{";
  for (const auto& w : words) {
    if (out.size() > 1) out += ",";
    out += w.to_string();
  }
  return out + "}";
}

}  // namespace

VerifyCheck check_psi_injective(int n) {
  VerifyCheck check{"psi injective (n=" + std::to_string(n) + ")", true, 0, {}};
  std::map<std::set<Word>, SegmentConfig> seen;
  for (const auto& c : all_configs(n)) {
    ++check.cases;
    auto [it, inserted] = seen.emplace(psi(c, n), c);
    if (!inserted && check.passed) {
      check.passed = false;
      check.counterexample = to_string(c) + " and " + to_string(it->second);
    }
  }
  return check;
}

std::vector<VerifyCheck> verify_against_oracle(int n, int max_len) {
  if (max_len < 0) throw PreconditionError("max_len must be nonnegative");
  const Automaton a = Automaton::build(n);
  const auto accepted = accepted_by_length(a, max_len);
  std::vector<VerifyCheck> out;

  for (int k = 0; k <= max_len; ++k) {
    VerifyCheck check{"language k=" + std::to_string(k), true, 0, {}};
    const auto expected = oracle::enumerate_language(n, k);
    const std::set<Word> actual(accepted[k].begin(), accepted[k].end());
    check.cases = expected.size();
    if (actual != expected) {
      check.passed = false;
      for (const auto& w : expected) {
        if (!actual.contains(w)) {
          check.counterexample = w.to_string() + " rejected by the automaton";
          break;
        }
      }
      if (check.counterexample.empty()) {
        for (const auto& w : actual) {
          if (!expected.contains(w)) {
            check.counterexample = w.to_string() + " is not a max-lex word";
            break;
          }
        }
      }
    }
    out.push_back(std::move(check));
  }

  VerifyCheck forbidden{"forbidden prefixes = psi(state)", true, 0, {}};
  oracle::ForbiddenPrefixSearch search(n);
  for (const auto& words : accepted) {
    for (const auto& w : words) {
      ++forbidden.cases;
      const auto expected = search(w);
      const auto actual = psi(a.state(*a.run(w)), n);
      if (expected != actual) {
        forbidden.passed = false;
        forbidden.counterexample = w.to_string() + ": oracle " + describe(expected) +
                                   ", state " + describe(actual);
        break;
      }
    }
    if (!forbidden.passed) break;
  }
  out.push_back(std::move(forbidden));

  out.push_back(check_psi_injective(n));
  return out;
}

}  // namespace braidlex
