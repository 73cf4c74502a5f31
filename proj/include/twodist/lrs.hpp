#ifndef TWODIST_LRS_HPP
#define TWODIST_LRS_HPP

#include <optional>
#include <vector>

#include "twodist/bound_polys.hpp"

namespace twodist {

/// Knobs for the supremum search over an admissible interval.
struct SearchSettings {
    /// Uniform grid points over the closed interval, endpoints included.
    int grid = 20001;
    /// Golden-section refinement stops once the bracket is narrower than this.
    double bracket_width = 1e-10;
    double tol = kSignTolerance;
    /// Worker threads for table(); 0 picks the hardware concurrency.
    unsigned threads = 0;

    void validate() const;
};

/// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Second inner product forced by the distance-ratio constraint: (k a - 1) / (k - 1).
double b_k(int k, double a);

/// max(floor((1 + sqrt(2n)) / 2), 2): the largest admissible ratio index.
int k_max(int n);

/// Values of a with a + b_k(a) < 0 and b_k(a) >= -1: [(2-k)/k, 1/(2k-1)).
/// Returned as its closure; the search treats the right end as attained.
Interval admissible_interval(int k);

/// min_i U_i at (a, b_k(a)), +infinity when no candidate is in domain.
/// Throws std::invalid_argument if a lies outside the closed interval.
double Q(int n, int k, double a, double tol = kSignTolerance);

/// Same as Q but keeps the per-candidate detail.
BestBound Q_detail(int n, int k, double a, double tol = kSignTolerance);

/// Everything attached to one (n, k).
struct KSlice {
    int n = 0;
    int k = 0;
    Interval interval;
    /// Supremum of Q over the interval, +infinity when inconclusive.
    double phi = 0.0;
    double argmax = 0.0;
    /// False when Q is infinite somewhere on the interval.
    bool conclusive = true;
    /// max(floor(phi + 1e-9), 2n + 3); empty when inconclusive.
    std::optional<int> omega_hat_nk;
};

KSlice solve_slice(int n, int k, const SearchSettings& settings = {});

double phi(int n, int k, const SearchSettings& settings = {});

std::optional<int> omega_hat_nk(int n, int k, const SearchSettings& settings = {});

struct OmegaHat {
    /// Empty when some slice is inconclusive.
    std::optional<int> value;
    /// Smallest k attaining the maximum over the conclusive slices.
    int k_star = 2;
    std::vector<KSlice> slices;

    bool conclusive() const { return value.has_value(); }
};

OmegaHat omega_hat(int n, const SearchSettings& settings = {});

/// n(n+1)/2, the largest size with a + b >= 0. Requires n >= 7.
int rho(int n);

/// max(omega_hat(n), rho(n)); empty when omega_hat is inconclusive.
std::optional<int> g_upper(int n, const SearchSettings& settings = {});

struct TableRow {
    int n = 0;
    std::optional<int> omega_hat;
    int rho = 0;
    int k_star = 0;
    std::optional<int> g_upper;

    bool conclusive() const { return omega_hat.has_value(); }
};

/// One row per n in [n_min, n_max], ordered by n. Rows are computed in parallel.
std::vector<TableRow> table(int n_min, int n_max, const SearchSettings& settings = {});

struct ProfileSample {
    double a = 0.0;
    double q = 0.0;
    /// Smallest winning candidate index, 0 when q is infinite.
    int winning_index = 0;
};

/// Uniform samples of Q over the closed interval, both endpoints included.
std::vector<ProfileSample> profile(int n, int k, int samples, double tol = kSignTolerance);

} // namespace twodist

#endif // TWODIST_LRS_HPP
