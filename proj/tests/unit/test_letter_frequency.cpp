#include <doctest.h>

#include <braidlex/automaton.hpp>
#include <braidlex/spectral.hpp>

#include <cmath>

using namespace braidlex;

// Expected red at n = 4: words avoiding a1 are counted by the copy of the
// n-1 automaton, so the error decays like (lambda_3 / lambda_4)^k ~ 0.871^k
// and is still ~8.7e-6 at k = 60.
TEST_CASE("last-letter frequency at k=60 is within 1e-6 of P_{n,1}") {
  for (int n = 2; n <= 4; ++n) {
    const auto a = Automaton::build(n);
    const auto counts = count_words(a, 60);
    const double fraction = static_cast<double>(counts.per_letter[0]) /
                            static_cast<double>(counts.total);
    CAPTURE(n);
    CHECK(std::abs(fraction - growth_row(n).p_1) < 1e-6);
  }
}
