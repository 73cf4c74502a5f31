#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twodist/bound_polys.hpp"
#include "twodist/constructions.hpp"
#include "twodist/gegenbauer.hpp"
#include "twodist/lrs.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace twodist;

namespace {

SearchSettings make_settings(int grid, double tol, unsigned threads)
{
    SearchSettings s;
    s.grid = grid;
    s.tol = tol;
    s.threads = threads;
    return s;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = R"pbdoc(
        Delsarte linear-programming bounds for spherical two-distance sets.
    )pbdoc";

    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

    // Gegenbauer polynomials and basis changes. Polynomials cross the boundary
    // as plain coefficient lists, lowest degree first.
    m.def("gegenbauer_eval", &gegenbauer_eval, py::arg("n"), py::arg("k"), py::arg("t"));
    m.def(
        "gegenbauer_poly",
        [](int n, int k) {
            const MonomialPoly p = gegenbauer_poly(n, k);
            return std::vector<double>(p.coeffs().begin(), p.coeffs().end());
        },
        py::arg("n"), py::arg("k"));
    m.def(
        "to_gegenbauer", [](int n, std::vector<double> p) { return to_gegenbauer(n, MonomialPoly(std::move(p))).coeffs; },
        py::arg("n"), py::arg("coeffs"));
    m.def(
        "from_gegenbauer",
        [](int n, std::vector<double> f) {
            const MonomialPoly p = from_gegenbauer(GegenbauerExpansion{n, std::move(f)});
            return std::vector<double>(p.coeffs().begin(), p.coeffs().end());
        },
        py::arg("n"), py::arg("coeffs"));

    py::class_<CandidateBound>(m, "CandidateBound")
        .def_readonly("index", &CandidateBound::index)
        .def_readonly("c", &CandidateBound::c)
        .def_readonly("d", &CandidateBound::d)
        .def_readonly("well_defined", &CandidateBound::well_defined)
        .def_readonly("in_domain", &CandidateBound::in_domain)
        .def_readonly("value", &CandidateBound::value)
        .def_property_readonly("polynomial",
                               [](const CandidateBound& c) {
                                   const auto s = c.polynomial.coeffs();
                                   return std::vector<double>(s.begin(), s.end());
                               })
        .def_property_readonly("expansion", [](const CandidateBound& c) { return c.expansion.coeffs; })
        .def("__repr__", [](const CandidateBound& c) {
            return "<CandidateBound i=" + std::to_string(c.index) + " in_domain=" + (c.in_domain ? "True" : "False") +
                   " value=" + std::to_string(c.value) + ">";
        });

    m.def(
        "build_candidate",
        [](int index, int n, double a, double b, double tol) { return build_candidate(index, {n, a, b}, tol); },
        py::arg("index"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("tol") = kSignTolerance);

    m.def(
        "best_bound",
        [](int n, double a, double b, double tol) {
            const BestBound bb = best_bound({n, a, b}, tol);
            return py::make_tuple(bb.value, bb.winners);
        },
        py::arg("n"), py::arg("a"), py::arg("b"), py::arg("tol") = kSignTolerance,
        "Minimum of U_1..U_5 at (a, b) and the indices attaining it.");

    m.def(
        "delsarte_check",
        [](int n, std::vector<double> coeffs, std::vector<double> inner_products, double tol) -> py::object {
            const auto verdict = delsarte_check(GegenbauerExpansion{n, std::move(coeffs)}, inner_products, tol);
            if (verdict.accepted()) {
                return py::int_(*verdict.bound);
            }
            return py::str(verdict.rejection->message());
        },
        py::arg("n"), py::arg("coeffs"), py::arg("inner_products"), py::arg("tol") = kSignTolerance,
        "Integer bound floor(f(1)/f_0) on success, otherwise a string naming the violated condition.");

    // Ratio constraint and the table pipeline.
    m.def("b_k", &b_k, py::arg("k"), py::arg("a"));
    m.def("k_max", &k_max, py::arg("n"));
    m.def(
        "admissible_interval",
        [](int k) {
            const Interval iv = admissible_interval(k);
            return py::make_tuple(iv.lo, iv.hi);
        },
        py::arg("k"));
    m.def("Q", &Q, py::arg("n"), py::arg("k"), py::arg("a"), py::arg("tol") = kSignTolerance);

    py::class_<KSlice>(m, "KSlice")
        .def_readonly("n", &KSlice::n)
        .def_readonly("k", &KSlice::k)
        .def_property_readonly("interval", [](const KSlice& s) { return py::make_tuple(s.interval.lo, s.interval.hi); })
        .def_readonly("phi", &KSlice::phi)
        .def_readonly("argmax", &KSlice::argmax)
        .def_readonly("conclusive", &KSlice::conclusive)
        .def_readonly("omega_hat_nk", &KSlice::omega_hat_nk);

    m.def(
        "solve_slice", [](int n, int k, int grid, double tol) { return solve_slice(n, k, make_settings(grid, tol, 1)); },
        py::arg("n"), py::arg("k"), py::arg("grid") = 20001, py::arg("tol") = kSignTolerance);
    m.def(
        "phi", [](int n, int k, int grid, double tol) { return phi(n, k, make_settings(grid, tol, 1)); },
        py::arg("n"), py::arg("k"), py::arg("grid") = 20001, py::arg("tol") = kSignTolerance);
    m.def(
        "omega_hat_nk",
        [](int n, int k, int grid, double tol) { return omega_hat_nk(n, k, make_settings(grid, tol, 1)); },
        py::arg("n"), py::arg("k"), py::arg("grid") = 20001, py::arg("tol") = kSignTolerance);
    m.def(
        "omega_hat",
        [](int n, int grid, double tol) {
            const OmegaHat w = omega_hat(n, make_settings(grid, tol, 1));
            return py::make_tuple(w.value, w.k_star);
        },
        py::arg("n"), py::arg("grid") = 20001, py::arg("tol") = kSignTolerance);
    m.def("rho", &rho, py::arg("n"));
    m.def(
        "g_upper", [](int n, int grid, double tol) { return g_upper(n, make_settings(grid, tol, 1)); }, py::arg("n"),
        py::arg("grid") = 20001, py::arg("tol") = kSignTolerance);

    py::class_<TableRow>(m, "TableRow")
        .def_readonly("n", &TableRow::n)
        .def_readonly("omega_hat", &TableRow::omega_hat)
        .def_readonly("rho", &TableRow::rho)
        .def_readonly("k_star", &TableRow::k_star)
        .def_readonly("g_upper", &TableRow::g_upper)
        .def_property_readonly("conclusive", &TableRow::conclusive)
        .def("__repr__", [](const TableRow& r) {
            return "<TableRow n=" + std::to_string(r.n) +
                   " omega_hat=" + (r.omega_hat ? std::to_string(*r.omega_hat) : std::string("inf")) +
                   " rho=" + std::to_string(r.rho) + " k=" + std::to_string(r.k_star) + ">";
        });

    m.def(
        "table",
        [](int n_min, int n_max, int grid, double tol, unsigned threads) {
            py::gil_scoped_release release;
            return table(n_min, n_max, make_settings(grid, tol, threads));
        },
        py::arg("n_min"), py::arg("n_max"), py::arg("grid") = 20001, py::arg("tol") = kSignTolerance,
        py::arg("threads") = 0);
    m.def(
        "profile",
        [](int n, int k, int samples, double tol) {
            std::vector<py::tuple> out;
            for (const auto& s : profile(n, k, samples, tol)) {
                out.push_back(py::make_tuple(s.a, s.q, s.winning_index));
            }
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("samples"), py::arg("tol") = kSignTolerance,
        "List of (a, Q, winning index) samples; Q is float('inf') where no candidate applies.");

    // Constructions. Point sets are (m, n) float64 arrays, one point per row.
    m.def(
        "lambda_set", [](int n) { return lambda_set(n).points; }, py::arg("n"));
    m.def(
        "lambda_params",
        [](int n) {
            const auto p = lambda_params(n);
            return py::make_tuple(p.a, p.b);
        },
        py::arg("n"));
    m.def(
        "verify_two_distance",
        [](const Eigen::MatrixXd& points) {
            const auto c = verify_two_distance(UnitPointSet{points});
            py::dict d;
            d["valid"] = c.valid;
            d["a"] = c.a;
            d["b"] = c.b;
            d["count_a"] = c.count_a;
            d["count_b"] = c.count_b;
            d["kind"] = c.diagnostic();
            return d;
        },
        py::arg("points"));
    m.def(
        "gram_check",
        [](const Eigen::MatrixXd& points) {
            const auto g = gram_check(UnitPointSet{points});
            return py::make_tuple(g.psd, g.rank);
        },
        py::arg("points"));
    m.def(
        "independence_rank",
        [](const Eigen::MatrixXd& points, double a, double b, std::uint64_t seed) {
            return independence_rank(UnitPointSet{points}, a, b, seed);
        },
        py::arg("points"), py::arg("a"), py::arg("b"), py::arg("seed") = kDefaultSeed);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
