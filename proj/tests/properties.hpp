// Randomized invariant suites shared by the unit tests and the acceptance runner.
#ifndef TWODIST_TESTS_PROPERTIES_HPP
#define TWODIST_TESTS_PROPERTIES_HPP

#include <cstdint>
#include <string>

namespace properties {

struct Result {
    std::string name;
    bool ok = true;
    long long checked = 0;
    double worst = 0.0;
    std::string detail;
};

/// |G_k^{(n)}(1) - 1| < 1e-12 for 2 <= n <= 50, 0 <= k <= 10.
Result gegenbauer_normalization();

/// Recurrence agrees with the closed forms of G_2, G_3, G_4 at 100 random t, within 1e-12.
Result recurrence_matches_closed_forms(std::uint64_t seed = 1);

/// to_gegenbauer then from_gegenbauer reproduces random degree <= 6 polynomials within 1e-10.
Result expansion_round_trip(std::uint64_t seed = 2, int trials = 1000);

/// Sum of the Gegenbauer coefficients equals p(1) within 1e-10.
Result expansion_sum_rule(std::uint64_t seed = 3, int trials = 1000);

/// Every in-domain candidate vanishes at a and b within 1e-9.
Result candidate_roots(std::uint64_t seed = 4, int trials = 4000);

/// Index-specific coefficients (f_1 for i=2, f_2 for i=3, f_1,f_2 for i=4, f_2,f_3 for i=5)
/// vanish within 1e-9 on random in-domain samples.
Result candidate_vanishing_coefficients(std::uint64_t seed = 5, int trials = 4000);

} // namespace properties

#endif // TWODIST_TESTS_PROPERTIES_HPP
