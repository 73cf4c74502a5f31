#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "twodist/lrs.hpp"

using namespace twodist;
using doctest::Approx;

TEST_CASE("b_k examples")
{
    CHECK(b_k(2, 0.0) == -1.0);
    CHECK(b_k(3, 0.2) == Approx(-0.2).epsilon(1e-15));
    CHECK(b_k(2, 1.0 / 3) == Approx(-1.0 / 3).epsilon(1e-15));
    CHECK_THROWS_AS(b_k(1, 0.1), std::invalid_argument);
}

TEST_CASE("k_max matches integer enumeration")
{
    CHECK(k_max(7) == 2);
    CHECK(k_max(25) == 4);
    CHECK(k_max(40) == 4);
    for (int n = 2; n <= 400; ++n) {
        // Largest k with 2k - 1 <= sqrt(2n), i.e. (2k-1)^2 <= 2n, floored at 2.
        int k = 1;
        while ((2 * (k + 1) - 1) * (2 * (k + 1) - 1) <= 2 * n) {
            ++k;
        }
        CHECK(k_max(n) == std::max(k, 2));
    }
    CHECK_THROWS_AS(k_max(1), std::invalid_argument);
}

TEST_CASE("admissible interval keeps b_k(a) in [-1, a]")
{
    std::mt19937_64 rng(11);
    for (int k = 2; k <= 6; ++k) {
        const Interval iv = admissible_interval(k);
        CHECK(iv.lo == Approx((2.0 - k) / k));
        CHECK(iv.hi == Approx(1.0 / (2 * k - 1)));
        CHECK(iv.lo < iv.hi);
        CHECK(b_k(k, iv.lo) == Approx(-1.0).epsilon(1e-15));
        CHECK(iv.hi + b_k(k, iv.hi) == Approx(0.0).epsilon(1e-15));
        std::uniform_real_distribution<double> u(iv.lo, iv.hi);
        for (int s = 0; s < 1000; ++s) {
            const double a = u(rng);
            const double b = b_k(k, a);
            CHECK(b >= -1.0 - 1e-15);
            CHECK(b <= a);
            CHECK(a + b < 1e-12);
        }
    }
}

TEST_CASE("Q examples")
{
    CHECK(Q(7, 2, 1.0 / 3) == Approx(28.0).epsilon(1e-12));
    const double q23 = Q(23, 3, 0.2);
    CHECK(q23 <= 276.0 + 1e-9);
    CHECK(Q_detail(23, 3, 0.2).candidates[0].value == Approx(276.0).epsilon(1e-12));

    // Near the interior maximiser for n=25, k=3, Q stays below the supremum.
    double where = 0.0;
    const double top = oracle::grid_max([](double a) { return Q(25, 3, a); }, 0.16, 0.18, 2001, &where);
    CHECK(top > 284.0);
    CHECK(top <= 284.14 + 0.05);

    CHECK_THROWS_AS(Q(7, 2, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Q(7, 2, -0.01), std::invalid_argument);
    CHECK_NOTHROW(Q(7, 2, 0.0));
}

TEST_CASE("phi reproduces the reported decimals")
{
    CHECK(phi(25, 3) == Approx(284.14).epsilon(0.05 / 284.14));
    CHECK(std::abs(phi(25, 3) - 284.14) <= 0.05);
    CHECK(std::abs(phi(23, 3) - 277.095) <= 0.01);
}

TEST_CASE("phi against a dense brute-force grid")
{
    // The refined maximum can only exceed a plain grid maximum, and not by much.
    for (auto [n, k] : std::vector<std::pair<int, int>>{{7, 2}, {12, 2}, {25, 3}, {25, 4}, {40, 2}}) {
        const Interval iv = admissible_interval(k);
        const double brute = oracle::grid_max([n = n, k = k](double a) { return Q(n, k, a); }, iv.lo, iv.hi, 200001);
        const double refined = phi(n, k);
        INFO("n=" << n << " k=" << k);
        CHECK(refined >= brute - 1e-12);
        CHECK(refined - brute < 1e-6);
    }
    // n=7: the supremum sits inside the interval, above the endpoint value 28.
    const double p7 = phi(7, 2);
    CHECK(p7 == Approx(28.925).epsilon(1e-4));
    CHECK(p7 > Q(7, 2, 1.0 / 3));
}

TEST_CASE("phi at exact rational maxima")
{
    // Suprema of U_1(a, b_3(a)) found symbolically: 76 at a = 7/45, 96 at a = 3/19, 176 at a = 17/105.
    CHECK(std::abs(phi(18, 3) - 76.0) < 1e-6);
    CHECK(std::abs(phi(19, 3) - 96.0) < 1e-6);
    CHECK(std::abs(phi(21, 3) - 176.0) < 1e-6);
    CHECK(solve_slice(18, 3).argmax == Approx(7.0 / 45).epsilon(1e-4));
    CHECK(omega_hat_nk(18, 3) == 76);
    CHECK(omega_hat_nk(19, 3) == 96);
    CHECK(omega_hat_nk(21, 3) == 176);
}

TEST_CASE("endpoint capture")
{
    for (auto [n, k] : std::vector<std::pair<int, int>>{{7, 2}, {13, 3}, {23, 3}, {31, 4}}) {
        const KSlice s = solve_slice(n, k);
        REQUIRE(s.conclusive);
        const double lo = Q(n, k, s.interval.lo);
        const double hi = Q(n, k, s.interval.hi);
        if (std::isfinite(lo)) {
            CHECK(s.phi >= lo);
        }
        if (std::isfinite(hi)) {
            CHECK(s.phi >= hi);
        }
    }
}

TEST_CASE("phi preconditions")
{
    CHECK_THROWS_AS(phi(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(phi(7, 3), std::invalid_argument);
    CHECK_THROWS_AS(phi(25, 1), std::invalid_argument);
    SearchSettings bad;
    bad.grid = 1;
    CHECK_THROWS_AS(phi(25, 3, bad), std::invalid_argument);
}

TEST_CASE("omega_hat_nk examples")
{
    CHECK(omega_hat_nk(7, 2) == 28);
    CHECK(omega_hat_nk(22, 3) == 275);
    CHECK(omega_hat_nk(10, 2) == 37);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{13, 3}, {25, 4}, {40, 3}}) {
        const KSlice s = solve_slice(n, k);
        REQUIRE(s.omega_hat_nk.has_value());
        CHECK(*s.omega_hat_nk == std::max(static_cast<int>(std::floor(s.phi + 1e-9)), 2 * n + 3));
    }
}

TEST_CASE("omega_hat examples")
{
    const auto w18 = omega_hat(18);
    CHECK(w18.value == 76);
    CHECK(w18.k_star == 3);
    const auto w40 = omega_hat(40);
    CHECK(w40.value == 928);
    CHECK(w40.k_star == 2);
    CHECK(w40.slices.size() == 3);
    const auto w23 = omega_hat(23);
    CHECK(w23.value == 277);
    CHECK(w23.k_star == 3);
    CHECK_THROWS_AS(omega_hat(6), std::invalid_argument);
}

TEST_CASE("rho and g_upper")
{
    CHECK(rho(7) == 28);
    CHECK(rho(23) == 276);
    CHECK(rho(40) == 820);
    CHECK_THROWS_AS(rho(6), std::invalid_argument);
    CHECK(g_upper(23) == 277);
    CHECK(g_upper(30) == 465);
    CHECK(g_upper(40) == 928);
    for (int n = 7; n <= 12; ++n) {
        CHECK(*g_upper(n) >= n * (n + 1) / 2);
    }
}

TEST_CASE("table rows")
{
    const auto t7 = table(7, 7);
    REQUIRE(t7.size() == 1);
    CHECK(t7[0].n == 7);
    CHECK(t7[0].omega_hat == 28);
    CHECK(t7[0].rho == 28);
    CHECK(t7[0].k_star == 2);

    const auto t35 = table(35, 35);
    REQUIRE(t35.size() == 1);
    CHECK(t35[0].omega_hat == 360);
    CHECK(t35[0].rho == 630);
    CHECK(t35[0].k_star == 2);
    CHECK(t35[0].g_upper == 630);

    CHECK_THROWS_AS(table(6, 10), std::invalid_argument);
    CHECK_THROWS_AS(table(10, 9), std::invalid_argument);
}

TEST_CASE("table is deterministic and independent of thread count")
{
    SearchSettings serial;
    serial.grid = 2001;
    serial.threads = 1;
    SearchSettings parallel = serial;
    parallel.threads = 4;
    const auto a = table(7, 16, serial);
    const auto b = table(7, 16, parallel);
    const auto c = table(7, 16, parallel);
    REQUIRE(a.size() == 10);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].n == static_cast<int>(7 + i));
        CHECK(a[i].omega_hat == b[i].omega_hat);
        CHECK(b[i].omega_hat == c[i].omega_hat);
        CHECK(a[i].k_star == b[i].k_star);
    }
}

TEST_CASE("profile examples")
{
    const auto five = profile(25, 3, 5);
    REQUIRE(five.size() == 5);
    double top = 0.0;
    for (const auto& s : five) {
        top = std::max(top, s.q);
    }
    CHECK(top <= 284.15);

    const auto ends = profile(12, 2, 2);
    REQUIRE(ends.size() == 2);
    CHECK(ends[0].a == admissible_interval(2).lo);
    CHECK(ends[1].a == admissible_interval(2).hi);

    const auto fine = profile(23, 3, 1001);
    double best = 0.0;
    for (const auto& s : fine) {
        best = std::max(best, s.q);
    }
    CHECK(best >= 276.5);
    CHECK(best <= 277.095);

    CHECK_THROWS_AS(profile(7, 5, 10), std::invalid_argument);
    CHECK_THROWS_AS(profile(25, 3, 1), std::invalid_argument);
}

TEST_CASE("Q is continuous while the winning candidate is unchanged")
{
    for (auto [n, k] : std::vector<std::pair<int, int>>{{7, 2}, {23, 3}, {25, 3}, {40, 2}, {40, 4}}) {
        const auto samples = profile(n, k, 20001);
        for (std::size_t j = 1; j < samples.size(); ++j) {
            if (samples[j].winning_index != 0 && samples[j].winning_index == samples[j - 1].winning_index) {
                INFO("n=" << n << " k=" << k << " a=" << samples[j].a);
                CHECK(std::abs(samples[j].q - samples[j - 1].q) <= 1.0);
            }
        }
    }
}
