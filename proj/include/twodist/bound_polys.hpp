#ifndef TWODIST_BOUND_POLYS_HPP
#define TWODIST_BOUND_POLYS_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twodist/gegenbauer.hpp"

namespace twodist {

/// Sign tolerance used for every coefficient check (f_k >= -tol, f_0 > tol).
inline constexpr double kSignTolerance = 1e-9;

/// Number of bound polynomials P_1 ... P_5.
inline constexpr int kCandidateCount = 5;

/// Dimension and the two inner products of a spherical two-distance set, a > b.
struct InnerProductPair {
    int n = 2;
    double a = 0.0;
    double b = 0.0;

    /// Throws std::invalid_argument unless n >= 2 and -1 <= b < a < 1.
    void validate() const;
};

/// One of the five bound polynomials for a fixed (n, a, b).
///
/// P_1 = (t-a)(t-b), P_2 = P_1 (t+c), P_3 = P_1 (t+a+b) and
/// P_4, P_5 = P_1 (t^2 + c t + d). The free parameters are fixed by forcing
/// f_1 = 0 (i=2), f_1 = f_2 = 0 (i=4) or f_2 = f_3 = 0 (i=5).
struct CandidateBound {
    int index = 1;
    std::optional<double> c;
    std::optional<double> d;
    /// False when the parameters c, d cannot be determined (a+b = 0 for i=2,
    /// singular linear system for i=4,5).
    bool well_defined = false;
    MonomialPoly polynomial;
    GegenbauerExpansion expansion;
    bool in_domain = false;
    /// P_i(1) / f_0 when in domain, +infinity otherwise.
    double value = 0.0;
};

CandidateBound build_candidate(int index, const InnerProductPair& pair, double tol = kSignTolerance);

std::array<CandidateBound, kCandidateCount> build_all_candidates(const InnerProductPair& pair,
                                                                 double tol = kSignTolerance);

enum class DelsarteFailure {
    negative_coefficient,
    nonpositive_constant,
    positive_on_set,
};

struct DelsarteRejection {
    DelsarteFailure reason;
    /// Offending coefficient index (negative_coefficient) or position in T (positive_on_set).
    std::size_t where = 0;
    double offending_value = 0.0;

    std::string message() const;
};

struct DelsarteVerdict {
    std::optional<long long> bound;
    std::optional<DelsarteRejection> rejection;

    bool accepted() const { return bound.has_value(); }
};

/// Checks the hypotheses of the Delsarte bound for f against the inner-product
/// set T and, if they hold, returns floor(f(1) / f_0).
DelsarteVerdict delsarte_check(const GegenbauerExpansion& f, std::span<const double> inner_products,
                               double tol = kSignTolerance);

struct BestBound {
    double value = 0.0;
    /// Indices (1-based) attaining the minimum; empty when every candidate is out of domain.
    std::vector<int> winners;
    std::array<CandidateBound, kCandidateCount> candidates;
};

/// Pointwise minimum of U_i over the five candidates.
BestBound best_bound(const InnerProductPair& pair, double tol = kSignTolerance);

} // namespace twodist

#endif // TWODIST_BOUND_POLYS_HPP
