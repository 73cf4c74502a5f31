#include "twodist/bound_polys.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace twodist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this, a+b (i=2) or the relative 2x2 determinant (i=4,5) counts as zero.
constexpr double kSingularTolerance = 1e-12;

// Relative width within which two U_i count as tied for the minimum.
constexpr double kTieTolerance = 1e-12;

MonomialPoly quadratic_base(const InnerProductPair& pair)
{
    return MonomialPoly::linear_factor(pair.a) * MonomialPoly::linear_factor(pair.b);
}

// Solve for (c, d) in P = base * (t^2 + c t + d) so that f_{rows[0]} = f_{rows[1]} = 0.
// The expansion is linear in (c, d): f = E(base t^2) + c E(base t) + d E(base).
bool solve_quartic_parameters(const InnerProductPair& pair, std::array<int, 2> rows, double& c, double& d)
{
    const MonomialPoly base = quadratic_base(pair);
    const GegenbauerExpansion e2 = to_gegenbauer(pair.n, base * MonomialPoly{0.0, 0.0, 1.0});
    const GegenbauerExpansion e1 = to_gegenbauer(pair.n, base * MonomialPoly{0.0, 1.0});
    const GegenbauerExpansion e0 = to_gegenbauer(pair.n, base);

    const double m00 = e1.coeff(rows[0]);
    const double m01 = e0.coeff(rows[0]);
    const double m10 = e1.coeff(rows[1]);
    const double m11 = e0.coeff(rows[1]);
    const double r0 = -e2.coeff(rows[0]);
    const double r1 = -e2.coeff(rows[1]);

    const double det = m00 * m11 - m01 * m10;
    const double scale = (std::abs(m00) + std::abs(m01)) * (std::abs(m10) + std::abs(m11));
    if (!(scale > 0.0) || std::abs(det) < kSingularTolerance * scale) {
        return false;
    }
    c = (r0 * m11 - m01 * r1) / det;
    d = (m00 * r1 - r0 * m10) / det;
    return std::isfinite(c) && std::isfinite(d);
}

} // namespace

void InnerProductPair::validate() const
{
    if (n < 2) {
        throw std::invalid_argument("dimension n must be >= 2");
    }
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("inner products must be finite");
    }
    if (!(b >= -1.0 && b < a && a < 1.0)) {
        std::ostringstream os;
        os << "inner products must satisfy -1 <= b < a < 1, got a=" << a << ", b=" << b;
        throw std::invalid_argument(os.str());
    }
}

CandidateBound build_candidate(int index, const InnerProductPair& pair, double tol)
{
    if (index < 1 || index > kCandidateCount) {
        throw std::invalid_argument("candidate index must be in 1..5, got " + std::to_string(index));
    }
    pair.validate();

    CandidateBound out;
    out.index = index;
    out.value = kInf;
    const MonomialPoly base = quadratic_base(pair);

    switch (index) {
    case 1:
        out.polynomial = base;
        out.well_defined = true;
        break;
    case 2: {
        const double sum = pair.a + pair.b;
        if (std::abs(sum) < kSingularTolerance) {
            break;
        }
        const double n2 = pair.n + 2.0;
        const double c = (pair.a * pair.b * n2 + 3.0) / (n2 * sum);
        out.c = c;
        out.polynomial = base * MonomialPoly{c, 1.0};
        out.well_defined = true;
        break;
    }
    case 3:
        out.polynomial = base * MonomialPoly{pair.a + pair.b, 1.0};
        out.well_defined = true;
        break;
    case 4:
    case 5: {
        const std::array<int, 2> rows = index == 4 ? std::array<int, 2>{1, 2} : std::array<int, 2>{2, 3};
        double c = 0.0;
        double d = 0.0;
        if (!solve_quartic_parameters(pair, rows, c, d)) {
            break;
        }
        out.c = c;
        out.d = d;
        out.polynomial = base * MonomialPoly{d, c, 1.0};
        out.well_defined = true;
        break;
    }
    }

    if (!out.well_defined) {
        out.expansion = GegenbauerExpansion{pair.n, {}};
        return out;
    }

    out.expansion = to_gegenbauer(pair.n, out.polynomial);
    bool nonnegative = true;
    for (double f : out.expansion.coeffs) {
        nonnegative = nonnegative && f >= -tol;
    }
    const double f0 = out.expansion.coeff(0);
    out.in_domain = nonnegative && f0 > tol;
    if (out.in_domain) {
        out.value = out.polynomial(1.0) / f0;
    }
    return out;
}

std::array<CandidateBound, kCandidateCount> build_all_candidates(const InnerProductPair& pair, double tol)
{
    std::array<CandidateBound, kCandidateCount> out;
    for (int i = 1; i <= kCandidateCount; ++i) {
        out[static_cast<std::size_t>(i - 1)] = build_candidate(i, pair, tol);
    }
    return out;
}

std::string DelsarteRejection::message() const
{
    std::ostringstream os;
    switch (reason) {
    case DelsarteFailure::negative_coefficient:
        os << "negative Gegenbauer coefficient f_" << where << " = " << offending_value;
        break;
    case DelsarteFailure::nonpositive_constant:
        os << "nonpositive constant coefficient f_0 = " << offending_value;
        break;
    case DelsarteFailure::positive_on_set:
        os << "polynomial is positive at inner product #" << where << " (value " << offending_value << ")";
        break;
    }
    return os.str();
}

DelsarteVerdict delsarte_check(const GegenbauerExpansion& f, std::span<const double> inner_products, double tol)
{
    DelsarteVerdict verdict;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
        if (f.coeffs[k] < -tol) {
            verdict.rejection = DelsarteRejection{DelsarteFailure::negative_coefficient, k, f.coeffs[k]};
            return verdict;
        }
    }
    const double f0 = f.coeff(0);
    if (!(f0 > tol)) {
        verdict.rejection = DelsarteRejection{DelsarteFailure::nonpositive_constant, 0, f0};
        return verdict;
    }
    for (std::size_t j = 0; j < inner_products.size(); ++j) {
        const double t = inner_products[j];
        if (!(t >= -1.0 && t < 1.0)) {
            throw std::invalid_argument("inner products must lie in [-1, 1)");
        }
        const double v = f(t);
        if (v > tol) {
            verdict.rejection = DelsarteRejection{DelsarteFailure::positive_on_set, j, v};
            return verdict;
        }
    }
    // Same upward nudge as the table pipeline: an exact integer ratio must not floor down.
    verdict.bound = static_cast<long long>(std::floor(f.value_at_one() / f0 + tol));
    return verdict;
}

BestBound best_bound(const InnerProductPair& pair, double tol)
{
    BestBound out;
    out.candidates = build_all_candidates(pair, tol);
    out.value = kInf;
    for (const auto& cand : out.candidates) {
        out.value = std::min(out.value, cand.value);
    }
    if (std::isfinite(out.value)) {
        for (const auto& cand : out.candidates) {
            if (cand.value <= out.value * (1.0 + kTieTolerance)) {
                out.winners.push_back(cand.index);
            }
        }
    }
    return out;
}

} // namespace twodist
