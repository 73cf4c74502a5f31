#include "twodist/lrs.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace twodist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Suprema reached only as limits (e.g. exactly 28 at an endpoint) must not floor to 27.
constexpr double kFloorNudge = 1e-9;

// Slack allowed when checking that a lies in the closed interval.
constexpr double kIntervalSlack = 1e-12;

const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

void require_slice(int n, int k)
{
    if (n < 4) {
        throw std::invalid_argument("phi requires n >= 4, got " + std::to_string(n));
    }
    const int kk = k_max(n);
    if (k < 2 || k > kk) {
        std::ostringstream os;
        os << "k must lie in 2.." << kk << " for n=" << n << " (K~(n)=" << kk << "), got " << k;
        throw std::invalid_argument(os.str());
    }
}

struct Maximum {
    double x = 0.0;
    double value = -kInf;
    bool saw_infinity = false;
};

// Golden-section search for a maximum of Q inside [lo, hi].
Maximum golden_maximize(int n, int k, double lo, double hi, const SearchSettings& settings)
{
    Maximum best;
    auto eval = [&](double x) {
        const double v = Q(n, k, x, settings.tol);
        if (!std::isfinite(v)) {
            best.saw_infinity = true;
        } else if (v > best.value) {
            best.value = v;
            best.x = x;
        }
        return v;
    };

    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = eval(x1);
    double f2 = eval(x2);
    while (hi - lo > settings.bracket_width) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = eval(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = eval(x1);
        }
    }
    return best;
}

} // namespace

void SearchSettings::validate() const
{
    if (grid < 2) {
        throw std::invalid_argument("grid must have at least 2 points");
    }
    if (!(bracket_width > 0.0)) {
        throw std::invalid_argument("bracket width must be positive");
    }
    if (!(tol >= 0.0)) {
        throw std::invalid_argument("tolerance must be nonnegative");
    }
}

double b_k(int k, double a)
{
    if (k < 2) {
        throw std::invalid_argument("b_k requires k >= 2, got " + std::to_string(k));
    }
    return (k * a - 1.0) / (k - 1.0);
}

int k_max(int n)
{
    if (n < 2) {
        throw std::invalid_argument("k_max requires n >= 2, got " + std::to_string(n));
    }
    const int k = static_cast<int>(std::floor((1.0 + std::sqrt(2.0 * n)) / 2.0));
    return std::max(k, 2);
}

Interval admissible_interval(int k)
{
    if (k < 2) {
        throw std::invalid_argument("admissible interval requires k >= 2, got " + std::to_string(k));
    }
    return Interval{(2.0 - k) / k, 1.0 / (2.0 * k - 1.0)};
}

BestBound Q_detail(int n, int k, double a, double tol)
{
    const Interval iv = admissible_interval(k);
    if (!(a >= iv.lo - kIntervalSlack && a <= iv.hi + kIntervalSlack)) {
        std::ostringstream os;
        os << "a=" << a << " outside [" << iv.lo << ", " << iv.hi << "] for k=" << k;
        throw std::invalid_argument(os.str());
    }
    // At the left end b_k(a) = -1 exactly; rounding may push it just below.
    const double b = std::max(b_k(k, a), -1.0);
    return best_bound(InnerProductPair{n, a, b}, tol);
}

double Q(int n, int k, double a, double tol)
{
    return Q_detail(n, k, a, tol).value;
}

KSlice solve_slice(int n, int k, const SearchSettings& settings)
{
    require_slice(n, k);
    settings.validate();

    KSlice slice;
    slice.n = n;
    slice.k = k;
    slice.interval = admissible_interval(k);
    const double lo = slice.interval.lo;
    const double hi = slice.interval.hi;
    const int count = settings.grid;
    const double step = (hi - lo) / (count - 1);

    std::vector<double> xs(static_cast<std::size_t>(count));
    std::vector<double> vs(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        xs[j] = j + 1 == count ? hi : lo + step * j;
        vs[j] = Q(n, k, xs[j], settings.tol);
    }

    slice.conclusive = std::all_of(vs.begin(), vs.end(), [](double v) { return std::isfinite(v); });
    if (!slice.conclusive) {
        slice.phi = kInf;
        slice.argmax = xs[static_cast<std::size_t>(
            std::find_if(vs.begin(), vs.end(), [](double v) { return !std::isfinite(v); }) - vs.begin())];
        return slice;
    }

    const auto top = std::max_element(vs.begin(), vs.end());
    double best = *top;
    double best_x = xs[static_cast<std::size_t>(top - vs.begin())];

    for (int j = 0; j < count; ++j) {
        const bool left_ok = j == 0 || vs[j] >= vs[j - 1];
        const bool right_ok = j + 1 == count || vs[j] >= vs[j + 1];
        if (!left_ok || !right_ok) {
            continue;
        }
        const double bracket_lo = xs[std::max(j - 1, 0)];
        const double bracket_hi = xs[std::min(j + 1, count - 1)];
        const Maximum m = golden_maximize(n, k, bracket_lo, bracket_hi, settings);
        if (m.saw_infinity) {
            slice.conclusive = false;
            slice.phi = kInf;
            slice.argmax = m.x;
            return slice;
        }
        if (m.value > best) {
            best = m.value;
            best_x = m.x;
        }
    }

    slice.phi = best;
    slice.argmax = best_x;
    slice.omega_hat_nk = std::max(static_cast<int>(std::floor(best + kFloorNudge)), 2 * n + 3);
    return slice;
}

double phi(int n, int k, const SearchSettings& settings)
{
    return solve_slice(n, k, settings).phi;
}

std::optional<int> omega_hat_nk(int n, int k, const SearchSettings& settings)
{
    return solve_slice(n, k, settings).omega_hat_nk;
}

OmegaHat omega_hat(int n, const SearchSettings& settings)
{
    if (n < 7) {
        throw std::invalid_argument("omega_hat requires n >= 7, got " + std::to_string(n));
    }
    OmegaHat out;
    bool conclusive = true;
    int best = -1;
    for (int k = 2; k <= k_max(n); ++k) {
        KSlice slice = solve_slice(n, k, settings);
        if (!slice.omega_hat_nk) {
            conclusive = false;
        } else if (*slice.omega_hat_nk > best) {
            best = *slice.omega_hat_nk;
            out.k_star = k;
        }
        out.slices.push_back(std::move(slice));
    }
    if (conclusive) {
        out.value = best;
    }
    return out;
}

int rho(int n)
{
    if (n < 7) {
        throw std::invalid_argument("rho(n) = n(n+1)/2 is established only for n >= 7, got " + std::to_string(n));
    }
    return n * (n + 1) / 2;
}

std::optional<int> g_upper(int n, const SearchSettings& settings)
{
    const OmegaHat w = omega_hat(n, settings);
    if (!w.value) {
        return std::nullopt;
    }
    return std::max(*w.value, rho(n));
}

std::vector<TableRow> table(int n_min, int n_max, const SearchSettings& settings)
{
    if (n_min < 7 || n_min > n_max) {
        std::ostringstream os;
        os << "table requires 7 <= n_min <= n_max, got n_min=" << n_min << ", n_max=" << n_max;
        throw std::invalid_argument(os.str());
    }
    settings.validate();

    const auto rows = static_cast<std::size_t>(n_max - n_min + 1);
    std::vector<TableRow> out(rows);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < rows; i = next++) {
            const int n = n_min + static_cast<int>(i);
            const OmegaHat w = omega_hat(n, settings);
            TableRow row;
            row.n = n;
            row.omega_hat = w.value;
            row.rho = rho(n);
            row.k_star = w.k_star;
            if (w.value) {
                row.g_upper = std::max(*w.value, row.rho);
            }
            out[i] = row;
        }
    };

    unsigned threads = settings.threads == 0 ? std::thread::hardware_concurrency() : settings.threads;
    threads = std::clamp(threads, 1u, static_cast<unsigned>(rows));
    if (threads == 1) {
        worker();
        return out;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    pool.clear();
    return out;
}

std::vector<ProfileSample> profile(int n, int k, int samples, double tol)
{
    require_slice(n, k);
    if (samples < 2) {
        throw std::invalid_argument("profile requires at least 2 samples");
    }
    const Interval iv = admissible_interval(k);
    const double step = (iv.hi - iv.lo) / (samples - 1);
    std::vector<ProfileSample> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        const double a = j + 1 == samples ? iv.hi : iv.lo + step * j;
        const BestBound bb = Q_detail(n, k, a, tol);
        out.push_back(ProfileSample{a, bb.value, bb.winners.empty() ? 0 : bb.winners.front()});
    }
    return out;
}

} // namespace twodist
