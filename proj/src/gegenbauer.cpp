#include "twodist/gegenbauer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace twodist {

namespace {

void require_valid(int n, int k)
{
    if (n < 2) {
        throw std::domain_error("Gegenbauer polynomials require dimension n >= 2, got " + std::to_string(n));
    }
    if (k < 0) {
        throw std::domain_error("Gegenbauer degree must be nonnegative, got " + std::to_string(k));
    }
}

} // namespace

MonomialPoly::MonomialPoly() : coeffs_{0.0} {}

MonomialPoly::MonomialPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs))
{
    strip();
}

MonomialPoly::MonomialPoly(std::initializer_list<double> coeffs) : coeffs_(coeffs)
{
    strip();
}

MonomialPoly MonomialPoly::linear_factor(double root)
{
    return MonomialPoly{-root, 1.0};
}

void MonomialPoly::strip()
{
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) {
        coeffs_.pop_back();
    }
    if (coeffs_.empty()) {
        coeffs_.push_back(0.0);
    }
}

double MonomialPoly::coeff(int j) const
{
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) {
        return 0.0;
    }
    return coeffs_[static_cast<std::size_t>(j)];
}

double MonomialPoly::operator()(double t) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

MonomialPoly& MonomialPoly::operator+=(const MonomialPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), 0.0);
    }
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
        coeffs_[j] += other.coeffs_[j];
    }
    strip();
    return *this;
}

MonomialPoly& MonomialPoly::operator-=(const MonomialPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), 0.0);
    }
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
        coeffs_[j] -= other.coeffs_[j];
    }
    strip();
    return *this;
}

MonomialPoly& MonomialPoly::operator*=(double s)
{
    for (double& c : coeffs_) {
        c *= s;
    }
    strip();
    return *this;
}

MonomialPoly operator*(const MonomialPoly& lhs, const MonomialPoly& rhs)
{
    std::vector<double> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return MonomialPoly(std::move(out));
}

bool approx_equal(const MonomialPoly& p, const MonomialPoly& q, double tol)
{
    const int top = std::max(p.degree(), q.degree());
    for (int j = 0; j <= top; ++j) {
        if (std::abs(p.coeff(j) - q.coeff(j)) > tol) {
            return false;
        }
    }
    return true;
}

double GegenbauerExpansion::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs.size())) {
        return 0.0;
    }
    return coeffs[static_cast<std::size_t>(k)];
}

double GegenbauerExpansion::operator()(double t) const
{
    if (coeffs.empty()) {
        return 0.0;
    }
    const auto g = gegenbauer_eval_all(dimension, degree(), t);
    double acc = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        acc += coeffs[k] * g[k];
    }
    return acc;
}

double GegenbauerExpansion::value_at_one() const
{
    double acc = 0.0;
    for (double f : coeffs) {
        acc += f;
    }
    return acc;
}

std::vector<double> gegenbauer_eval_all(int n, int max_k, double t)
{
    require_valid(n, max_k);
    std::vector<double> g(static_cast<std::size_t>(max_k) + 1);
    g[0] = 1.0;
    if (max_k >= 1) {
        g[1] = t;
    }
    for (int k = 2; k <= max_k; ++k) {
        const double num = (2.0 * k + n - 4) * t * g[k - 1] - (k - 1.0) * g[k - 2];
        g[k] = num / (k + n - 3.0);
    }
    return g;
}

double gegenbauer_eval(int n, int k, double t)
{
    return gegenbauer_eval_all(n, k, t).back();
}

MonomialPoly gegenbauer_poly(int n, int k)
{
    require_valid(n, k);
    // Coefficient lists of G_{k-2} and G_{k-1}, padded to degree k.
    std::vector<double> prev(static_cast<std::size_t>(k) + 1, 0.0);
    std::vector<double> curr(static_cast<std::size_t>(k) + 1, 0.0);
    prev[0] = 1.0;
    if (k == 0) {
        return MonomialPoly(prev);
    }
    curr[1] = 1.0;
    for (int j = 2; j <= k; ++j) {
        std::vector<double> next(static_cast<std::size_t>(k) + 1, 0.0);
        const double denom = j + n - 3.0;
        for (int m = 0; m < j; ++m) {
            next[m + 1] += (2.0 * j + n - 4) * curr[m] / denom;
        }
        for (int m = 0; m <= j - 2; ++m) {
            next[m] -= (j - 1.0) * prev[m] / denom;
        }
        prev = std::move(curr);
        curr = std::move(next);
    }
    return MonomialPoly(std::move(curr));
}

GegenbauerExpansion to_gegenbauer(int n, const MonomialPoly& p)
{
    require_valid(n, 0);
    const int degree = p.degree();
    std::vector<double> rest(p.coeffs().begin(), p.coeffs().end());
    GegenbauerExpansion e{n, std::vector<double>(static_cast<std::size_t>(degree) + 1, 0.0)};
    for (int k = degree; k >= 0; --k) {
        const MonomialPoly g = gegenbauer_poly(n, k);
        const double f = rest[k] / g.coeff(k);
        e.coeffs[k] = f;
        for (int j = 0; j <= k; ++j) {
            rest[j] -= f * g.coeff(j);
        }
        rest[k] = 0.0;
    }
    return e;
}

MonomialPoly from_gegenbauer(const GegenbauerExpansion& e)
{
    MonomialPoly out;
    for (int k = 0; k <= e.degree(); ++k) {
        if (e.coeffs[k] != 0.0) {
            out += e.coeffs[k] * gegenbauer_poly(e.dimension, k);
        }
    }
    return out;
}

} // namespace twodist
