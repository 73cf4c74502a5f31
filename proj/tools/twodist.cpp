// twodist: Delsarte bounds for spherical two-distance sets.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 inconclusive bound encountered with --strict.

#include <charconv>
#include <cmath>
#include <limits>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twodist/bound_polys.hpp"
#include "twodist/constructions.hpp"
#include "twodist/lrs.hpp"
#include "twodist/output.hpp"

namespace {

using namespace twodist;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitInconclusive = 3;

constexpr int kMaxTableDimension = 60;
constexpr double kLambdaTolerance = 1e-10;

struct GlobalFlags {
    std::string format = "csv";
    int precision = 12;
    std::string out;
    double tol = kSignTolerance;
    int grid = 20001;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    bool strict = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string real_text(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

OutputConfig output_config(const GlobalFlags& flags)
{
    OutputConfig config;
    config.format = parse_format(flags.format);
    config.precision = flags.precision;
    config.destination = flags.out;
    config.validate();
    return config;
}

SearchSettings search_settings(const GlobalFlags& flags)
{
    SearchSettings settings;
    settings.grid = flags.grid;
    settings.tol = flags.tol;
    settings.threads = flags.threads;
    settings.validate();
    return settings;
}

Report new_report(const std::string& command, const GlobalFlags& flags)
{
    Report report;
    report.command = command;
    report.meta["format"] = flags.format;
    report.meta["grid"] = std::to_string(flags.grid);
    report.meta["precision"] = std::to_string(flags.precision);
    report.meta["seed"] = std::to_string(flags.seed);
    report.meta["tol"] = real_text(flags.tol);
    return report;
}

void emit(const Report& report, const OutputConfig& config)
{
    const std::string text = render(report, config);
    if (config.destination.empty() || config.destination == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(config.destination, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open output file '" + config.destination + "'");
    }
    file << text;
}

Cell optional_int(const std::optional<int>& v)
{
    if (v) {
        return static_cast<long long>(*v);
    }
    return std::numeric_limits<double>::infinity();
}

Cell optional_real(const std::optional<double>& v)
{
    if (v) {
        return *v;
    }
    return std::string();
}

int cmd_table(const GlobalFlags& flags, int n_min, int n_max)
{
    if (n_min < 7 || n_min > n_max || n_max > kMaxTableDimension) {
        throw UsageError("table requires 7 <= n-min <= n-max <= " + std::to_string(kMaxTableDimension));
    }
    const OutputConfig config = output_config(flags);
    const auto rows = table(n_min, n_max, search_settings(flags));

    Report report = new_report("table", flags);
    report.meta["n_min"] = std::to_string(n_min);
    report.meta["n_max"] = std::to_string(n_max);
    report.columns = {"n", "omega_hat", "rho", "k_star", "g_upper", "conclusive"};
    bool all_conclusive = true;
    for (const auto& row : rows) {
        all_conclusive = all_conclusive && row.conclusive();
        report.add({static_cast<long long>(row.n), optional_int(row.omega_hat), static_cast<long long>(row.rho),
                    static_cast<long long>(row.k_star), optional_int(row.g_upper), row.conclusive()});
    }
    emit(report, config);
    return flags.strict && !all_conclusive ? kExitInconclusive : kExitOk;
}

int cmd_profile(const GlobalFlags& flags, int n, int k, int samples)
{
    if (n < 4) {
        throw UsageError("profile requires n >= 4");
    }
    const int kk = k_max(n);
    if (k < 2 || k > kk) {
        throw UsageError("k must lie in 2.." + std::to_string(kk) + " since K~(" + std::to_string(n) +
                         ") = " + std::to_string(kk));
    }
    if (samples < 2) {
        throw UsageError("profile requires --samples >= 2");
    }
    const OutputConfig config = output_config(flags);
    const auto points = profile(n, k, samples, flags.tol);

    Report report = new_report("profile", flags);
    report.meta["n"] = std::to_string(n);
    report.meta["k"] = std::to_string(k);
    report.meta["samples"] = std::to_string(samples);
    report.records_key = "samples";
    report.columns = {"a", "q", "winning_i"};
    bool all_finite = true;
    for (const auto& p : points) {
        all_finite = all_finite && std::isfinite(p.q);
        report.add({p.a, p.q, static_cast<long long>(p.winning_index)});
    }
    emit(report, config);
    return flags.strict && !all_finite ? kExitInconclusive : kExitOk;
}

int cmd_bound(const GlobalFlags& flags, int n, double a, double b)
{
    const InnerProductPair pair{n, a, b};
    try {
        pair.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const OutputConfig config = output_config(flags);
    const BestBound best = best_bound(pair, flags.tol);

    Report report = new_report("bound", flags);
    report.meta["n"] = std::to_string(n);
    report.meta["a"] = real_text(a);
    report.meta["b"] = real_text(b);
    report.columns = {"candidate", "well_defined", "in_domain", "c", "d", "f", "u", "winners"};
    for (const auto& cand : best.candidates) {
        report.add({static_cast<long long>(cand.index), cand.well_defined, cand.in_domain, optional_real(cand.c),
                    optional_real(cand.d), cand.expansion.coeffs, cand.value, std::string()});
    }
    std::string winners;
    for (int w : best.winners) {
        winners += (winners.empty() ? "" : ";") + std::to_string(w);
    }
    report.add({std::string("min"), std::string(), std::string(), std::string(), std::string(),
                std::vector<double>{}, best.value, winners});
    emit(report, config);
    return flags.strict && !std::isfinite(best.value) ? kExitInconclusive : kExitOk;
}

int cmd_delsarte(const GlobalFlags& flags, int n, const std::vector<double>& coeffs,
                 const std::vector<double>& points)
{
    if (n < 2) {
        throw UsageError("delsarte-check requires n >= 2");
    }
    if (coeffs.empty()) {
        throw UsageError("delsarte-check requires at least one coefficient");
    }
    for (double t : points) {
        if (!(t >= -1.0 && t < 1.0)) {
            throw UsageError("inner products must lie in [-1, 1)");
        }
    }
    const OutputConfig config = output_config(flags);
    const GegenbauerExpansion f{n, coeffs};
    const DelsarteVerdict verdict = delsarte_check(f, points, flags.tol);

    Report report = new_report("delsarte-check", flags);
    report.meta["n"] = std::to_string(n);
    report.columns = {"accepted", "bound", "f_at_1", "f0", "reason"};
    report.add({verdict.accepted(),
                verdict.bound ? Cell(static_cast<long long>(*verdict.bound)) : Cell(std::string()),
                f.value_at_one(), f.coeff(0),
                verdict.rejection ? verdict.rejection->message() : std::string()});
    emit(report, config);
    return verdict.accepted() ? kExitOk : kExitVerification;
}

int cmd_verify_lambda(const GlobalFlags& flags, int n)
{
    if (n < 2) {
        throw UsageError("verify-lambda requires n >= 2");
    }
    const OutputConfig config = output_config(flags);
    const UnitPointSet s = lambda_set(n);
    const InnerProducts expected = lambda_params(n);
    const TwoDistanceCertificate cert = verify_two_distance(s);
    const GramReport gram = gram_check(s);

    const bool informational = n < 3;
    const bool pass = cert.valid && s.size() == n * (n + 1) / 2 && std::abs(cert.a - expected.a) < kLambdaTolerance &&
                      std::abs(cert.b - expected.b) < kLambdaTolerance && gram.psd && gram.rank == n;

    Report report = new_report("verify-lambda", flags);
    report.meta["n"] = std::to_string(n);
    report.columns = {"n",     "points",     "a",   "b",    "expected_a", "expected_b", "count_a",
                      "count_b", "psd",      "rank", "kind", "status"};
    report.add({static_cast<long long>(n), static_cast<long long>(s.size()), cert.a, cert.b, expected.a, expected.b,
                cert.count_a, cert.count_b, gram.psd, static_cast<long long>(gram.rank), cert.diagnostic(),
                std::string(informational ? "informational" : (pass ? "pass" : "fail"))});
    emit(report, config);
    return informational || pass ? kExitOk : kExitVerification;
}

int cmd_independence(const GlobalFlags& flags, int n)
{
    if (n < 7) {
        throw UsageError("independence requires n >= 7 (a + b >= 0 for the simplex midpoints)");
    }
    const OutputConfig config = output_config(flags);
    const UnitPointSet s = lambda_set(n);
    const InnerProducts ip = lambda_params(n);
    const int rank = independence_rank(s, ip.a, ip.b, flags.seed);
    const int m = s.size();
    const bool pass = rank == m + n;

    Report report = new_report("independence", flags);
    report.meta["n"] = std::to_string(n);
    report.columns = {"m", "n", "rank", "expected", "bound", "status"};
    report.add({static_cast<long long>(m), static_cast<long long>(n), static_cast<long long>(rank),
                static_cast<long long>(m + n), static_cast<long long>(n * (n + 3) / 2),
                std::string(pass ? "pass" : "fail")});
    emit(report, config);
    return pass ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Delsarte linear-programming bounds for spherical two-distance sets"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", TWODIST_VERSION);

    GlobalFlags flags;
    app.add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}))
        ->capture_default_str();
    app.add_option("--precision", flags.precision, "Significant digits for reals")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    app.add_option("--out", flags.out, "Output file (default: standard output)");
    app.add_option("--tol", flags.tol, "Sign tolerance for Gegenbauer coefficients")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--grid", flags.grid, "Grid points for the supremum search")
        ->check(CLI::Range(2, 10'000'000))
        ->capture_default_str();
    app.add_option("--seed", flags.seed, "Seed for random evaluation points")->capture_default_str();
    app.add_option("--threads", flags.threads, "Worker threads for table (0 = all cores)")->capture_default_str();
    app.add_flag("--strict", flags.strict, "Exit with status 3 when a bound is inconclusive");

    int n_min = 7;
    int n_max = 40;
    auto* table_cmd = app.add_subcommand("table", "Compute omega_hat(n), rho(n) and the resulting upper bound on g(n)");
    table_cmd->add_option("--n-min", n_min)->capture_default_str();
    table_cmd->add_option("--n-max", n_max)->capture_default_str();

    int n = 0;
    int k = 0;
    int samples = 2001;
    auto* profile_cmd = app.add_subcommand("profile", "Sample Q_k(a) across the admissible interval");
    profile_cmd->add_option("--n", n)->required();
    profile_cmd->add_option("--k", k)->required();
    profile_cmd->add_option("--samples", samples)->capture_default_str();

    double a = 0.0;
    double b = 0.0;
    auto* bound_cmd = app.add_subcommand("bound", "Report the five candidate bounds for one (n, a, b)");
    bound_cmd->add_option("--n", n)->required();
    bound_cmd->add_option("--a", a)->required();
    bound_cmd->add_option("--b", b)->required();

    std::vector<double> coeffs;
    std::vector<double> points;
    auto* delsarte_cmd = app.add_subcommand("delsarte-check", "Check a Gegenbauer expansion against a set of inner products");
    delsarte_cmd->add_option("--n", n)->required();
    delsarte_cmd->add_option("--coeffs", coeffs, "f_0,f_1,...")->required()->delimiter(',');
    delsarte_cmd->add_option("--points", points, "Inner products t in [-1, 1)")->delimiter(',');

    auto* verify_cmd = app.add_subcommand("verify-lambda", "Verify the simplex-midpoint two-distance set");
    verify_cmd->add_option("--n", n)->required();

    auto* independence_cmd = app.add_subcommand("independence", "Numerical rank of the independence system");
    independence_cmd->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*table_cmd) {
            return cmd_table(flags, n_min, n_max);
        }
        if (*profile_cmd) {
            return cmd_profile(flags, n, k, samples);
        }
        if (*bound_cmd) {
            return cmd_bound(flags, n, a, b);
        }
        if (*delsarte_cmd) {
            return cmd_delsarte(flags, n, coeffs, points);
        }
        if (*verify_cmd) {
            return cmd_verify_lambda(flags, n);
        }
        if (*independence_cmd) {
            return cmd_independence(flags, n);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
