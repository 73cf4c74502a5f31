#ifndef TWODIST_GEGENBAUER_HPP
#define TWODIST_GEGENBAUER_HPP

#include <initializer_list>
#include <span>
#include <vector>

namespace twodist {

/// Univariate real polynomial in the monomial basis, coefficient j multiplies t^j.
///
/// Exact trailing zeros are stripped on construction, so the zero polynomial
/// is stored as a single coefficient 0.
class MonomialPoly {
public:
    MonomialPoly();
    explicit MonomialPoly(std::vector<double> coeffs);
    MonomialPoly(std::initializer_list<double> coeffs);

    /// (t - root)
    static MonomialPoly linear_factor(double root);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const double> coeffs() const { return coeffs_; }
    /// Coefficient of t^j, zero past the degree.
    double coeff(int j) const;

    double operator()(double t) const;

    MonomialPoly& operator+=(const MonomialPoly& other);
    MonomialPoly& operator-=(const MonomialPoly& other);
    MonomialPoly& operator*=(double s);

    friend MonomialPoly operator+(MonomialPoly lhs, const MonomialPoly& rhs) { return lhs += rhs; }
    friend MonomialPoly operator-(MonomialPoly lhs, const MonomialPoly& rhs) { return lhs -= rhs; }
    friend MonomialPoly operator*(MonomialPoly p, double s) { return p *= s; }
    friend MonomialPoly operator*(double s, MonomialPoly p) { return p *= s; }
    friend MonomialPoly operator*(const MonomialPoly& lhs, const MonomialPoly& rhs);

private:
    void strip();

    std::vector<double> coeffs_;
};

/// Coefficient-wise comparison after padding the shorter list with zeros.
bool approx_equal(const MonomialPoly& p, const MonomialPoly& q, double tol = 1e-12);

/// Coefficients f_k of a polynomial written as sum_k f_k G_k^{(n)}(t).
struct GegenbauerExpansion {
    int dimension = 2;
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double coeff(int k) const;
    double operator()(double t) const;
    /// Value at t = 1, which equals the coefficient sum since G_k(1) = 1.
    double value_at_one() const;
};

/// G_k^{(n)}(t) by the three-term recurrence, normalized to G_k(1) = 1.
/// Throws std::domain_error for n < 2 or k < 0.
double gegenbauer_eval(int n, int k, double t);

/// Values G_0(t) ... G_{max_k}(t) in one recurrence pass.
std::vector<double> gegenbauer_eval_all(int n, int max_k, double t);

/// Monomial coefficients of G_k^{(n)}, obtained by running the recurrence on coefficient lists.
MonomialPoly gegenbauer_poly(int n, int k);

/// Basis change by peeling the leading term: G_k has exact degree k with positive
/// leading coefficient, so the system is triangular.
GegenbauerExpansion to_gegenbauer(int n, const MonomialPoly& p);

MonomialPoly from_gegenbauer(const GegenbauerExpansion& e);

} // namespace twodist

#endif // TWODIST_GEGENBAUER_HPP
