#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "polybell/cli.hpp"
#include "polybell/identity_verifier.hpp"
#include "polybell/numeric_bridge.hpp"
#include "polybell/pbell.hpp"
#include "polybell/polybell.hpp"
#include "polybell/table.hpp"

namespace py = pybind11;
using namespace polybell;

namespace
{

PBellBackend backend_arg(const std::string& name)
{
    if (auto b = parse_backend(name)) {
        return *b;
    }
    throw py::value_error("unknown backend '" + name + "'");
}

std::vector<std::string> coeff_strings(const Polynomial& p)
{
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) {
        out.push_back(c.to_string());
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact p-Bell and poly-Bell numbers (values are returned as 'num/den' strings)";

    py::register_exception<BackendMismatch>(m, "BackendMismatch", PyExc_ArithmeticError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    m.def("backends", [] {
        std::vector<std::string> names;
        for (auto b : all_backends) {
            names.emplace_back(to_string(b));
        }
        return names;
    });

    m.def(
        "pbell_number",
        [](std::size_t n, std::size_t p, const std::string& backend, bool cross_check) {
            return pbell_number(n, p, backend_arg(backend), cross_check).to_string();
        },
        py::arg("n"), py::arg("p"), py::arg("backend") = "explicit", py::arg("cross_check") = false);

    m.def(
        "pbell_column",
        [](std::size_t n_max, std::size_t p, const std::string& backend) {
            std::vector<std::string> out;
            for (const auto& v : pbell_column(n_max, p, backend_arg(backend))) {
                out.push_back(v.to_string());
            }
            return out;
        },
        py::arg("n_max"), py::arg("p"), py::arg("backend") = "ztriangle");

    m.def(
        "polybell_value", [](std::size_t n, long upper) { return polybell_value(n, upper).value.to_string(); },
        py::arg("n"), py::arg("p"));

    m.def(
        "pbell_poly", [](std::size_t n, std::size_t p) { return coeff_strings(pbell_poly(n, p)); }, py::arg("n"),
        py::arg("p"), "Coefficients of x^0, x^1, ..., x^n.");

    m.def(
        "table",
        [](const std::string& kind, std::size_t n_max, std::size_t p_max, const std::string& backend,
           const std::string& format) {
            TableRequest req;
            const auto k = parse_table_kind(kind);
            const auto f = parse_table_format(format);
            if (!k || !f) {
                throw py::value_error("unknown table kind or format");
            }
            req.kind = *k;
            req.format = *f;
            req.n_max = n_max;
            req.p_max = p_max;
            req.backend = backend_arg(backend);
            return write_table(build_table(req), req.format);
        },
        py::arg("kind") = "pbell-numbers", py::arg("n_max") = 6, py::arg("p_max") = 3,
        py::arg("backend") = "ztriangle", py::arg("format") = "csv");

    m.def(
        "verify",
        [](std::size_t nmax, std::size_t pmax, std::size_t order, const std::vector<std::string>& only) {
            RunOptions opts;
            opts.nmax = nmax;
            opts.pmax = pmax;
            opts.order = order;
            opts.only = std::set<std::string>(only.begin(), only.end());
            std::vector<std::string> out;
            for (const auto& r : run_all(opts)) {
                out.push_back(r.to_json().dump());
            }
            return out;
        },
        py::arg("nmax") = 12, py::arg("pmax") = 5, py::arg("order") = 12,
        py::arg("only") = std::vector<std::string>{}, "One JSON report per identity check.");

    m.def("identity_ids", &identity_ids);

    m.def(
        "dobinski", [](std::size_t n, std::size_t p, double tol) { return dobinski_pbell(n, p, tol).to_json().dump(); },
        py::arg("n"), py::arg("p"), py::arg("tol") = 1e-9);
    m.def(
        "cesaro", [](std::size_t n, std::size_t p, double tol) { return cesaro_pbell(n, p, tol).to_json().dump(); },
        py::arg("n"), py::arg("p"), py::arg("tol") = 1e-6);
    m.def(
        "mc_moment",
        [](std::size_t n, std::size_t p, const std::string& x, std::uint64_t samples, std::uint64_t seed) {
            py::gil_scoped_release release;
            return mc_moment_check(n, p, Rational::parse(x), samples, seed).to_json().dump();
        },
        py::arg("n"), py::arg("p"), py::arg("x") = "0", py::arg("samples") = 100000, py::arg("seed") = 42);
    m.def(
        "mgf",
        [](std::size_t p, double t, std::uint64_t samples, std::uint64_t seed) {
            py::gil_scoped_release release;
            return mgf_check(p, t, samples, seed).to_json().dump();
        },
        py::arg("p"), py::arg("t"), py::arg("samples") = 100000, py::arg("seed") = 42);

    m.def("duality_counterexample", [] {
        const auto w = duality_counterexample();
        return std::make_tuple(w.n, w.p, w.lhs.to_string(), w.rhs.to_string());
    });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = run_cli(args, out, err);
            return std::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Returns (exit_code, stdout, stderr).");
}
