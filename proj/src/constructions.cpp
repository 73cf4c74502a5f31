#include "twodist/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace twodist {

namespace {

constexpr double kClusterDiameter = 1e-8;
constexpr double kClusterGap = 1e-6;
constexpr double kEigenTolerance = 1e-8;
constexpr double kRankTolerance = 1e-8;
constexpr int kExtraSamples = 20;
// a + b = 0 computed in floating point may come out as -1e-17.
constexpr double kSumTolerance = 1e-12;

// Row j (0-based) is (e_1 + ... + e_{j+1} - (j+1) e_{j+2}) / sqrt((j+1)(j+2)),
// an orthonormal basis of {x in R^{n+1} : sum x = 0}.
Eigen::MatrixXd hyperplane_frame(int n)
{
    Eigen::MatrixXd frame = Eigen::MatrixXd::Zero(n, n + 1);
    for (int j = 0; j < n; ++j) {
        const double m = j + 1.0;
        const double scale = 1.0 / std::sqrt(m * (m + 1.0));
        frame.row(j).head(j + 1).setConstant(scale);
        frame(j, j + 1) = -m * scale;
    }
    return frame;
}

} // namespace

void UnitPointSet::validate(double tol) const
{
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        if (std::abs(points.row(i).squaredNorm() - 1.0) > tol) {
            throw std::invalid_argument("point " + std::to_string(i) + " is not a unit vector");
        }
    }
}

UnitPointSet lambda_set(int n)
{
    if (n < 2) {
        throw std::invalid_argument("lambda_set requires n >= 2, got " + std::to_string(n));
    }
    const int m = n * (n + 1) / 2;
    const double shift = 2.0 / (n + 1.0);
    Eigen::MatrixXd raw(m, n + 1);
    int row = 0;
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            raw.row(row).setConstant(-shift);
            raw(row, i) += 1.0;
            raw(row, j) += 1.0;
            raw.row(row).normalize();
            ++row;
        }
    }
    return UnitPointSet{raw * hyperplane_frame(n).transpose()};
}

InnerProducts lambda_params(int n)
{
    if (n < 2) {
        throw std::invalid_argument("lambda_params requires n >= 2, got " + std::to_string(n));
    }
    return InnerProducts{(n - 3.0) / (2.0 * (n - 1.0)), -2.0 / (n - 1.0)};
}

std::string TwoDistanceCertificate::diagnostic() const
{
    switch (kind) {
    case DistanceClass::two_distance:
        return "two-distance";
    case DistanceClass::one_distance:
        return "one-distance";
    case DistanceClass::not_two_distance:
        break;
    }
    return "not two-distance";
}

TwoDistanceCertificate verify_two_distance(const UnitPointSet& s)
{
    if (s.size() < 3) {
        throw std::invalid_argument("two-distance verification needs at least 3 points");
    }
    const Eigen::MatrixXd g = s.gram();
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(s.size()) * (s.size() - 1) / 2);
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < g.cols(); ++j) {
            entries.push_back(g(i, j));
        }
    }
    std::sort(entries.begin(), entries.end());

    TwoDistanceCertificate cert;
    if (entries.back() - entries.front() < kClusterDiameter) {
        cert.kind = DistanceClass::one_distance;
        cert.a = cert.b = entries.front();
        cert.count_a = static_cast<long long>(entries.size());
        return cert;
    }

    std::size_t split = 1;
    double gap = entries[1] - entries[0];
    for (std::size_t i = 2; i < entries.size(); ++i) {
        if (entries[i] - entries[i - 1] > gap) {
            gap = entries[i] - entries[i - 1];
            split = i;
        }
    }
    const double low_diameter = entries[split - 1] - entries.front();
    const double high_diameter = entries.back() - entries[split];

    double low_sum = 0.0;
    for (std::size_t i = 0; i < split; ++i) {
        low_sum += entries[i];
    }
    double high_sum = 0.0;
    for (std::size_t i = split; i < entries.size(); ++i) {
        high_sum += entries[i];
    }
    cert.b = low_sum / static_cast<double>(split);
    cert.a = high_sum / static_cast<double>(entries.size() - split);
    cert.count_b = static_cast<long long>(split);
    cert.count_a = static_cast<long long>(entries.size() - split);

    cert.valid = low_diameter < kClusterDiameter && high_diameter < kClusterDiameter && gap > kClusterGap;
    cert.kind = cert.valid ? DistanceClass::two_distance : DistanceClass::not_two_distance;
    return cert;
}

GramReport gram_check(const UnitPointSet& s)
{
    GramReport report;
    if (s.size() == 0) {
        report.psd = true;
        return report;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s.gram(), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& eig = solver.eigenvalues();
    report.min_eigenvalue = eig.minCoeff();
    report.psd = report.min_eigenvalue > -kEigenTolerance;
    report.rank = static_cast<int>((eig.array() > kEigenTolerance).count());
    return report;
}

int independence_rank(const UnitPointSet& s, double a, double b, std::uint64_t seed)
{
    if (a + b < -kSumTolerance) {
        throw std::domain_error("hypothesis violated: the independence argument requires a + b >= 0");
    }
    if (!(a < 1.0 && b < 1.0)) {
        throw std::invalid_argument("inner products must be below 1");
    }
    const int m = s.size();
    const int n = s.dimension();
    const int columns = m + n + kExtraSamples;

    // Evaluation points: the set itself followed by random unit vectors.
    Eigen::MatrixXd samples(columns, n);
    samples.topRows(m) = s.points;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    for (int j = m; j < columns; ++j) {
        for (int c = 0; c < n; ++c) {
            samples(j, c) = normal(rng);
        }
        samples.row(j).normalize();
    }

    const double denom = (1.0 - a) * (1.0 - b);
    const Eigen::MatrixXd t = s.points * samples.transpose();
    Eigen::MatrixXd eval(m + n, columns);
    eval.topRows(m) = ((t.array() - a) * (t.array() - b) / denom).matrix();
    eval.bottomRows(n) = samples.transpose();

    Eigen::BDCSVD<Eigen::MatrixXd> svd(eval);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) {
        return 0;
    }
    return static_cast<int>((sv.array() > kRankTolerance * sv(0)).count());
}

} // namespace twodist
