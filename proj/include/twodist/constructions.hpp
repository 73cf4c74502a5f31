#ifndef TWODIST_CONSTRUCTIONS_HPP
#define TWODIST_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace twodist {

/// Unit vectors in R^n, one per row of `points`.
struct UnitPointSet {
    Eigen::MatrixXd points;

    int dimension() const { return static_cast<int>(points.cols()); }
    int size() const { return static_cast<int>(points.rows()); }
    Eigen::MatrixXd gram() const { return points * points.transpose(); }

    /// Throws std::invalid_argument if some row is not unit length within tol.
    void validate(double tol = 1e-10) const;
};

struct InnerProducts {
    double a = 0.0;
    double b = 0.0;
};

/// Midpoints e_i + e_j (i < j <= n+1) of the scaled simplex edges, centred and
/// projected to the unit sphere, in an orthonormal frame of the hyperplane sum x = 0.
UnitPointSet lambda_set(int n);

/// Inner products of lambda_set(n): a = (n-3)/(2(n-1)), b = -2/(n-1).
InnerProducts lambda_params(int n);

enum class DistanceClass {
    two_distance,
    one_distance,
    not_two_distance,
};

struct TwoDistanceCertificate {
    double a = 0.0;
    double b = 0.0;
    long long count_a = 0;
    long long count_b = 0;
    bool valid = false;
    DistanceClass kind = DistanceClass::not_two_distance;

    std::string diagnostic() const;
};

/// Splits the sorted off-diagonal Gram entries at their largest gap and accepts
/// when both halves have diameter below 1e-8 and the gap exceeds 1e-6.
TwoDistanceCertificate verify_two_distance(const UnitPointSet& s);

struct GramReport {
    bool psd = false;
    int rank = 0;
    double min_eigenvalue = 0.0;
};

GramReport gram_check(const UnitPointSet& s);

/// Default seed for the random evaluation points in independence_rank.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Numerical rank of the evaluation matrix of f_i(x) = F(<x, x_i>), with
/// F(t) = (t-a)(t-b)/((1-a)(1-b)), together with the n coordinate functionals.
/// Evaluated at the set itself plus n + 20 seeded random unit vectors.
/// Throws std::domain_error when a + b < 0.
int independence_rank(const UnitPointSet& s, double a, double b, std::uint64_t seed = kDefaultSeed);

} // namespace twodist

#endif // TWODIST_CONSTRUCTIONS_HPP
