#include "polybell/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "polybell/identity_verifier.hpp"
#include "polybell/numeric_bridge.hpp"
#include "polybell/pbell.hpp"
#include "polybell/polybell.hpp"
#include "polybell/table.hpp"

namespace polybell
{

namespace
{

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PBellBackend backend_or_throw(const std::string& name)
{
    if (auto b = parse_backend(name)) {
        return *b;
    }
    throw UsageError("unknown backend '" + name + "' (expected explicit, r3, ztriangle or genbernoulli)");
}

Rational rational_or_throw(const std::string& text, const char* flag)
{
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + ": expected an integer or num/den, got '" + text + "'");
    }
}

std::string approx(const Rational& r)
{
    std::ostringstream os;
    os << std::setprecision(17) << r.to_double();
    return os.str();
}

// ---- value -------------------------------------------------------------

struct ValueArgs {
    std::string kind = "pbell";
    std::size_t n = 0;
    long p = 0;
    std::string backend = "explicit";
    std::string x;
    bool cross_check = false;
    bool approx = false;
};

int cmd_value(const ValueArgs& a, std::ostream& out)
{
    const PBellBackend backend = backend_or_throw(a.backend);
    std::optional<Rational> value;
    std::optional<Polynomial> poly;

    if (a.kind == "pbell") {
        if (a.p < 0) {
            throw UsageError("--p must be >= 0 for kind pbell");
        }
        value = pbell_number(a.n, static_cast<std::size_t>(a.p), backend, a.cross_check);
    } else if (a.kind == "polybell") {
        if (a.p >= 0) {
            value = pbell_number(a.n, static_cast<std::size_t>(a.p), backend, a.cross_check)
                    / Rational(factorial(static_cast<unsigned long>(a.p)));
        } else {
            value = polybell_neg(a.n, static_cast<std::size_t>(-a.p));
        }
    } else if (a.kind == "pbell-poly") {
        if (a.p < 0) {
            throw UsageError("--p must be >= 0 for kind pbell-poly");
        }
        if (a.cross_check) {
            for (std::size_t k = 0; k <= a.n; ++k) {
                pbell_number(k, static_cast<std::size_t>(a.p), backend, true);
            }
        }
        poly = pbell_poly(a.n, static_cast<std::size_t>(a.p));
        if (!a.x.empty()) {
            value = poly_eval(*poly, rational_or_throw(a.x, "--x"));
        }
    } else {
        throw UsageError("unknown kind '" + a.kind + "' (expected pbell, polybell or pbell-poly)");
    }

    if (value) {
        out << value->to_string();
        if (a.approx) {
            out << "  ~" << approx(*value) << " (approximate)";
        }
        out << '\n';
    } else {
        out << poly->to_string() << '\n';
    }
    return exit_code::ok;
}

// ---- table -------------------------------------------------------------

struct TableArgs {
    std::string kind = "pbell-numbers";
    std::size_t n_max = 6;
    std::size_t p_max = 3;
    std::string backend = "ztriangle";
    std::string format = "csv";
    std::string out_path;
    bool cross_check = false;
};

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err)
{
    TableRequest req;
    req.n_max = a.n_max;
    req.p_max = a.p_max;
    req.cross_check = a.cross_check;
    req.backend = backend_or_throw(a.backend);
    if (auto k = parse_table_kind(a.kind)) {
        req.kind = *k;
    } else {
        throw UsageError("unknown table kind '" + a.kind + "'");
    }
    if (auto f = parse_table_format(a.format)) {
        req.format = *f;
    } else {
        throw UsageError("unknown format '" + a.format + "' (expected csv or json)");
    }

    const std::string text = write_table(build_table(req), req.format);
    if (a.out_path.empty()) {
        out << text;
        return exit_code::ok;
    }
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file || !(file << text) || !file.flush()) {
        err << "error: cannot write " << a.out_path << '\n';
        return exit_code::usage;
    }
    return exit_code::ok;
}

// ---- verify ------------------------------------------------------------

struct VerifyArgs {
    std::size_t nmax = 12;
    std::size_t pmax = 5;
    std::size_t order = 12;
    std::vector<std::string> only;
    std::string backend = "explicit";
    bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    RunOptions opts;
    opts.nmax = a.nmax;
    opts.pmax = a.pmax;
    opts.order = a.order;
    for (const auto& id : a.only) {
        if (!is_identity_id(id)) {
            throw UsageError("unknown identity id '" + id + "'");
        }
        opts.only.insert(id);
    }
    VerifyContext ctx;
    ctx.backend = backend_or_throw(a.backend);

    bool all = true;
    for (const auto& r : run_all(opts, ctx)) {
        out << (a.json ? r.to_json().dump() : r.to_line()) << '\n';
        all = all && r.passed();
    }
    return all ? exit_code::ok : exit_code::check_failed;
}

// ---- numeric -----------------------------------------------------------

struct NumericArgs {
    std::size_t n = 1;
    std::size_t p = 1;
    std::string x = "0";
    double tol = -1.0; // < 0: per-command default
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 42;
    double t = 0.3;
    std::size_t k_max = 5;
    double sigma = 3.0;
    std::string weight = "beta";
};

int emit(const NumericCheck& c, std::ostream& out)
{
    out << c.to_json().dump() << '\n';
    return c.passed() ? exit_code::ok : exit_code::check_failed;
}

int cmd_numeric(const std::string& which, const NumericArgs& a, std::ostream& out)
{
    if (which == "dobinski") {
        return emit(dobinski_pbell(a.n, a.p, a.tol < 0 ? 1e-9 : a.tol), out);
    }
    if (which == "dobinski-poly") {
        DobinskiWeight w;
        if (a.weight == "beta") {
            w = DobinskiWeight::Beta;
        } else if (a.weight == "bare") {
            w = DobinskiWeight::BarePrefactor;
        } else {
            throw UsageError("--weight must be beta or bare");
        }
        return emit(dobinski_pbell_poly(a.n, a.p, rational_or_throw(a.x, "--x"), a.tol < 0 ? 1e-9 : a.tol, w),
                    out);
    }
    if (which == "cesaro") {
        if (a.n == 0) {
            throw UsageError("cesaro needs --n >= 1");
        }
        return emit(cesaro_pbell(a.n, a.p, a.tol < 0 ? 1e-6 : a.tol), out);
    }
    if (which == "mc") {
        return emit(mc_moment_check(a.n, a.p, rational_or_throw(a.x, "--x"), a.samples, a.seed), out);
    }
    if (which == "mgf") {
        const MgfReport r = mgf_check(a.p, a.t, a.samples, a.seed);
        out << r.to_json().dump() << '\n';
        return r.passed() ? exit_code::ok : exit_code::check_failed;
    }
    if (which == "pmf") {
        bool all = true;
        for (const auto& r : pmf_check(a.p, a.k_max, a.samples, a.seed, a.sigma)) {
            out << r.to_json().dump() << '\n';
            all = all && r.matches_quadrature();
        }
        return all ? exit_code::ok : exit_code::check_failed;
    }
    throw UsageError("unknown numeric check '" + which + "'");
}

// ---- bench -------------------------------------------------------------

struct BenchArgs {
    std::size_t n_max = 30;
    std::size_t p_max = 3;
    long p = -1;
    std::vector<std::string> backends{"explicit", "r3", "ztriangle", "genbernoulli"};
    std::size_t repeat = 1;
};

std::string fnv1a_hex(std::string_view s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h = (h ^ c) * 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err)
{
    if (a.repeat == 0) {
        throw UsageError("--repeat must be >= 1");
    }
    std::vector<PBellBackend> backends;
    for (const auto& name : a.backends) {
        backends.push_back(backend_or_throw(name));
    }
    std::vector<std::size_t> columns;
    if (a.p >= 0) {
        columns.push_back(static_cast<std::size_t>(a.p));
    } else {
        for (std::size_t p = 0; p <= a.p_max; ++p) {
            columns.push_back(p);
        }
    }

    out << "backend,run,nmax,columns,seconds,peak_bits,values\n";
    std::optional<std::string> reference;
    bool agree = true;
    for (PBellBackend b : backends) {
        for (std::size_t run = 0; run < a.repeat; ++run) {
            TriangleCache cache; // cold cache per run
            std::string text;
            std::size_t peak = 0;
            const auto start = std::chrono::steady_clock::now();
            for (std::size_t p : columns) {
                for (const auto& v : pbell_column(a.n_max, p, b, cache)) {
                    peak = std::max(peak, v.bit_length());
                    text += v.to_string();
                    text += ',';
                }
            }
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            const std::string digest = fnv1a_hex(text);
            if (!reference) {
                reference = digest;
            } else if (*reference != digest) {
                agree = false;
            }
            std::ostringstream cols;
            for (std::size_t i = 0; i < columns.size(); ++i) {
                cols << (i ? ";" : "") << columns[i];
            }
            out << to_string(b) << ',' << run << ',' << a.n_max << ',' << cols.str() << ',' << std::fixed
                << std::setprecision(6) << secs << std::defaultfloat << ',' << peak << ',' << digest << '\n';
        }
    }
    if (!agree) {
        err << "error: backends produced different values\n";
        return exit_code::check_failed;
    }
    return exit_code::ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact p-Bell and poly-Bell numbers", "polybell"};
    app.require_subcommand(1);

    ValueArgs va;
    auto* value = app.add_subcommand("value", "Compute one exact value");
    value->add_option("--kind", va.kind, "pbell | polybell | pbell-poly")->capture_default_str();
    value->add_option("--n", va.n, "Lower index n")->required();
    value->add_option("--p", va.p, "Upper index p (negative allowed for polybell)")->required();
    value->add_option("--backend", va.backend, "explicit | r3 | ztriangle | genbernoulli")->capture_default_str();
    value->add_option("--x", va.x, "Evaluate pbell-poly at this rational x");
    value->add_flag("--cross-check", va.cross_check, "Run every backend and compare");
    value->add_flag("--approx", va.approx, "Also print a decimal approximation");

    TableArgs ta;
    auto* table = app.add_subcommand("table", "Emit a table of exact values");
    table->add_option("--kind", ta.kind, "pbell-numbers | polybell-neg | pbell-poly-coeffs")->capture_default_str();
    table->add_option("--nmax", ta.n_max)->capture_default_str();
    table->add_option("--pmax", ta.p_max)->capture_default_str();
    table->add_option("--backend", ta.backend)->capture_default_str();
    table->add_option("--format", ta.format, "csv | json")->capture_default_str();
    table->add_option("--out", ta.out_path, "Write to a file instead of stdout");
    table->add_flag("--cross-check", ta.cross_check);

    VerifyArgs ve;
    auto* verify = app.add_subcommand("verify", "Check identities at truncated order");
    verify->add_option("--nmax", ve.nmax)->capture_default_str();
    verify->add_option("--pmax", ve.pmax)->capture_default_str();
    verify->add_option("--order", ve.order)->capture_default_str();
    verify->add_option("--only", ve.only, "Comma-separated identity ids")->delimiter(',');
    verify->add_option("--backend", ve.backend)->capture_default_str();
    verify->add_flag("--json", ve.json, "One JSON report per line");

    NumericArgs na;
    std::string numeric_which;
    auto* numeric = app.add_subcommand("numeric", "Floating-point and Monte Carlo checks");
    numeric->add_option("check", numeric_which, "dobinski | dobinski-poly | cesaro | mc | mgf | pmf")->required();
    numeric->add_option("--n", na.n)->capture_default_str();
    numeric->add_option("--p", na.p)->capture_default_str();
    numeric->add_option("--x", na.x)->capture_default_str();
    numeric->add_option("--tol", na.tol);
    numeric->add_option("--samples", na.samples)->capture_default_str();
    numeric->add_option("--seed", na.seed)->capture_default_str();
    numeric->add_option("--t", na.t)->capture_default_str();
    numeric->add_option("--kmax", na.k_max)->capture_default_str();
    numeric->add_option("--sigma", na.sigma)->capture_default_str();
    numeric->add_option("--weight", na.weight, "beta | bare")->capture_default_str();

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Time the p-Bell backends");
    bench->add_option("--nmax", ba.n_max)->capture_default_str();
    bench->add_option("--pmax", ba.p_max)->capture_default_str();
    bench->add_option("--p", ba.p, "Single column instead of 0..pmax");
    bench->add_option("--backends", ba.backends)->delimiter(',');
    bench->add_option("--repeat", ba.repeat)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::usage;
    }

    try {
        if (*value) {
            return cmd_value(va, out);
        }
        if (*table) {
            return cmd_table(ta, out, err);
        }
        if (*verify) {
            return cmd_verify(ve, out);
        }
        if (*numeric) {
            return cmd_numeric(numeric_which, na, out);
        }
        if (*bench) {
            return cmd_bench(ba, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const BackendMismatch& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::check_failed;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << " (partial " << e.partial_value << " after " << e.terms_used
            << " terms)\n";
        return exit_code::check_failed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::check_failed;
    }
    return exit_code::usage;
}

} // namespace polybell
