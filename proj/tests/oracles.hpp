// Test-only reference computations. Nothing here calls into the code paths it checks.
#ifndef TWODIST_TESTS_ORACLES_HPP
#define TWODIST_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

namespace oracle {

// Closed forms of G_2, G_3, G_4.
inline double g2(int n, double t) { return (n * t * t - 1.0) / (n - 1.0); }
inline double g3(int n, double t) { return ((n + 2.0) * t * t * t - 3.0 * t) / (n - 1.0); }
inline double g4(int n, double t)
{
    return ((n + 2.0) * (n + 4.0) * std::pow(t, 4) - 6.0 * (n + 2.0) * t * t + 3.0) / (n * n - 1.0);
}

// Integral of h(cos x) sin^{n-2}(x) over [0, pi] by Gauss-Legendre in x; the integrand
// is analytic on the closed interval.
inline double sphere_integral(int n, const std::function<double(double)>& h, int nodes = 96)
{
    double acc = 0.0;
    for (int i = 1; i <= nodes; ++i) {
        // Newton iteration for the i-th root of P_nodes.
        double x = std::cos(std::numbers::pi * (i - 0.25) / (nodes + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int j = 2; j <= nodes; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = nodes * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const double theta = 0.5 * std::numbers::pi * (x + 1.0);
        acc += w * h(std::cos(theta)) * std::pow(std::sin(theta), n - 2);
    }
    return acc * 0.5 * std::numbers::pi;
}

// f_k = <p, G_k> / <G_k, G_k> under the weight (1 - t^2)^{(n-3)/2}, with G_k given by `basis`.
inline std::vector<double> project(int n, const std::function<double(double)>& p, int degree,
                                   const std::function<double(int, double)>& basis)
{
    std::vector<double> out;
    for (int k = 0; k <= degree; ++k) {
        const double num = sphere_integral(n, [&](double t) { return p(t) * basis(k, t); });
        const double den = sphere_integral(n, [&](double t) { return basis(k, t) * basis(k, t); });
        out.push_back(num / den);
    }
    return out;
}

// Closed-form G_k for k <= 4.
inline double closed_form(int n, int k, double t)
{
    switch (k) {
    case 0:
        return 1.0;
    case 1:
        return t;
    case 2:
        return g2(n, t);
    case 3:
        return g3(n, t);
    default:
        return g4(n, t);
    }
}

// U_1 = (1-a)(1-b) / (ab + 1/n).
inline double u1(int n, double a, double b) { return (1.0 - a) * (1.0 - b) / (a * b + 1.0 / n); }

// Explicit description of D_1: -a-b >= 0 and ab + 1/n > 0.
inline bool in_d1(int n, double a, double b) { return -a - b >= 0.0 && a * b + 1.0 / n > 0.0; }

// Explicit description of D_2: a+b != 0, c >= a+b, abc + (c-a-b)/n > 0.
inline bool in_d2(int n, double a, double b)
{
    if (a + b == 0.0) {
        return false;
    }
    const double c = (a * b * (n + 2.0) + 3.0) / ((n + 2.0) * (a + b));
    return c >= a + b && a * b * c + (c - a - b) / n > 0.0;
}

inline double d2_c(int n, double a, double b) { return (a * b * (n + 2.0) + 3.0) / ((n + 2.0) * (a + b)); }

// Plain dense-grid maximum of f over [lo, hi], endpoints included.
inline double grid_max(const std::function<double(double)>& f, double lo, double hi, int points, double* where = nullptr)
{
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < points; ++j) {
        const double x = j + 1 == points ? hi : lo + (hi - lo) * j / (points - 1);
        const double v = f(x);
        if (v > best) {
            best = v;
            if (where) {
                *where = x;
            }
        }
    }
    return best;
}

} // namespace oracle

#endif // TWODIST_TESTS_ORACLES_HPP
