// Acceptance run: one PASS/FAIL line per criterion, with wall time.
// Exit status is 0 only if every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../common/oracles.hpp"
#include "polybell/cli.hpp"
#include "polybell/identity_verifier.hpp"
#include "polybell/numeric_bridge.hpp"
#include "polybell/pbell.hpp"
#include "polybell/polybell.hpp"

using namespace polybell;

namespace
{

struct Outcome {
    bool ok;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds; // <= 0: no time limit
    std::function<Outcome()> run;
};

std::string run_cli_capture(const std::vector<std::string>& args, int& code)
{
    std::ostringstream out;
    std::ostringstream err;
    code = run_cli(args, out, err);
    return out.str();
}

Outcome golden_sp()
{
    int code = 0;
    const std::string out = run_cli_capture({"table", "--kind", "pbell-numbers", "--nmax", "6", "--pmax", "3"}, code);
    const std::string golden = oracle::read_file(POLYBELL_GOLDEN_DIR "/pbell_numbers_n6_p3.csv");
    if (code != 0) {
        return {false, "exit code " + std::to_string(code)};
    }
    for (const char* v : {"68/15", "167/12", "2057/42", "14/15", "127/21", "235/12", "179/140", "185/56",
                          "8389/840"}) {
        if (out.find(v) == std::string::npos) {
            return {false, std::string("missing ") + v};
        }
    }
    return {out == golden, out == golden ? "28 cells byte-identical" : "output differs from golden file"};
}

Outcome golden_polybell()
{
    // rows p = -1..-4, columns n = 0..9
    const long table[4][10] = {
        {0, 1, 3, 10, 37, 151, 674, 3263, 17007, 94828},
        {0, 0, 2, 12, 62, 320, 1712, 9604, 56674, 351792},
        {0, 0, 0, 6, 60, 450, 3120, 21336, 147756, 1048830},
        {0, 0, 0, 0, 24, 360, 3720, 33600, 287784, 2424744},
    };
    int code = 0;
    const std::string out = run_cli_capture({"table", "--kind", "polybell-neg", "--nmax", "9", "--pmax", "4"}, code);
    if (code != 0) {
        return {false, "exit code " + std::to_string(code)};
    }
    std::istringstream in(out);
    std::string line;
    std::getline(in, line); // header
    int matched = 0;
    for (int n = 0; n <= 9; ++n) {
        if (!std::getline(in, line)) {
            return {false, "short output"};
        }
        std::vector<std::string> cells;
        std::stringstream ls(line);
        for (std::string c; std::getline(ls, c, ',');) {
            cells.push_back(c);
        }
        if (cells.size() != 6) {
            return {false, "bad row " + line};
        }
        for (int q = 1; q <= 4; ++q) {
            if (cells[static_cast<std::size_t>(q) + 1] != std::to_string(table[q - 1][n])) {
                return {false, "mismatch at n=" + std::to_string(n) + " p=-" + std::to_string(q)};
            }
            ++matched;
        }
    }
    const bool golden = out == oracle::read_file(POLYBELL_GOLDEN_DIR "/polybell_neg_n9_p4.csv");
    return {matched == 40 && golden, std::to_string(matched) + "/40 integers exact"};
}

Outcome backend_agreement()
{
    TriangleCache cache;
    const VerifyContext ctx{PBellBackend::ExplicitStirling, &cache};
    const auto r = verify_backend_agreement(25, 8, ctx);
    return {r.passed(), r.passed() ? "234 cells, 4 backends" : r.to_line()};
}

Outcome identity_suite()
{
    RunOptions opts;
    opts.nmax = 12;
    opts.pmax = 5;
    opts.order = 12;
    std::size_t total = 0;
    std::vector<std::string> failed;
    for (const auto& r : run_all(opts)) {
        ++total;
        if (!r.passed()) {
            failed.push_back(r.to_line());
        }
    }
    std::string detail = std::to_string(total - failed.size()) + "/" + std::to_string(total) + " reports pass";
    for (const auto& f : failed) {
        detail += "\n      " + f;
    }
    return {failed.empty(), detail};
}

Outcome polynomial_coverage()
{
    int checked = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (long p : {1L, 2L, 3L, 10L}) {
            const Polynomial got = pbell_poly(n, static_cast<std::size_t>(p));
            if (got != oracle::displayed_pbell_poly(n, p)) {
                return {false, "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " + got.to_string()};
            }
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " polynomials exact"};
}

Outcome dobinski()
{
    double worst = 0.0;
    for (std::size_t n = 0; n <= 8; ++n) {
        for (std::size_t p = 0; p <= 4; ++p) {
            const auto c = dobinski_pbell(n, p, 1e-8);
            worst = std::max(worst, c.abs_error);
            if (c.abs_error > 1e-8) {
                return {false, "n=" + std::to_string(n) + " p=" + std::to_string(p) + " error "
                                   + std::to_string(c.abs_error)};
            }
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max error %.3g", worst);
    return {true, buf};
}

Outcome monte_carlo()
{
    int passed = 0;
    std::string detail;
    for (std::size_t n : {1, 2, 3}) {
        for (std::size_t p : {1, 2}) {
            for (long x : {0L, 1L}) {
                const auto c = mc_moment_check(n, p, Rational(x), 1000000, 20240601);
                if (c.passed()) {
                    ++passed;
                } else {
                    detail += " fail(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",x=" + std::to_string(x)
                              + ")";
                }
            }
        }
    }
    return {passed == 12, std::to_string(passed) + "/12 within 4 sigma" + detail};
}

Outcome duality()
{
    const auto w = duality_counterexample();
    const bool ok = w.n == 2 && w.p == 1 && w.lhs == Rational(3) && w.rhs == Rational(0);
    return {ok, "(" + std::to_string(w.n) + "," + std::to_string(w.p) + "): " + w.lhs.to_string()
                    + " != " + w.rhs.to_string()};
}

Outcome cesaro()
{
    std::string detail;
    bool ok = true;
    for (auto [n, p] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {3, 2}}) {
        const auto c = cesaro_pbell(n, p, 1e-6);
        ok = ok && c.abs_error <= 1e-5;
        char buf[96];
        std::snprintf(buf, sizeof buf, " (%zu,%zu) err %.2g;", n, p, c.abs_error);
        detail += buf;
    }
    detail.pop_back();
    return {ok, detail.substr(1)};
}

Outcome fault_detection()
{
    // Corrupt {5,2} in an otherwise fresh cache. The first p-Bell value to
    // change is B_{5,p}, so every EGF check must report index 5.
    TriangleCache clean;
    TriangleCache dirty;
    dirty.inject_fault({Family::Stirling2, 5, 2}, Rational(16));
    const VerifyContext ctx{PBellBackend::ExplicitStirling, &dirty};
    int caught = 0;
    for (std::size_t p = 0; p <= 3; ++p) {
        std::size_t expected = 0;
        while (expected <= 8 && pbell_explicit(expected, p, clean) == pbell_explicit(expected, p, dirty)) {
            ++expected;
        }
        const auto r = verify_egf_definition(p, 8, ctx);
        if (r.passed()) {
            return {false, "silent pass at p=" + std::to_string(p)};
        }
        if (r.detail->index != std::vector<std::size_t>{expected}) {
            return {false, "wrong index: " + r.to_line()};
        }
        ++caught;
    }
    return {true, std::to_string(caught) + "/4 EGF checks fail at index [5]"};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "golden table S_p", 1.0, golden_sp},
        {2, "golden table poly-Bell", 1.0, golden_polybell},
        {3, "backend agreement n<=25 p<=8", 30.0, backend_agreement},
        {4, "identity suite nmax=12 pmax=5 order=12", 60.0, identity_suite},
        {5, "polynomial coverage n<=4", 0.0, polynomial_coverage},
        {6, "Dobinski numeric 1e-8", 0.0, dobinski},
        {7, "Monte Carlo moments 4 sigma", 30.0, monte_carlo},
        {8, "duality failure", 0.0, duality},
        {9, "Cesaro quadrature 1e-5", 0.0, cesaro},
        {10, "fault detection", 0.0, fault_detection},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds) {
            o.ok = false;
            o.detail += " (over time budget)";
        }
        failures += o.ok ? 0 : 1;
        std::printf("%s %2d %-40s %8.3fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                    o.detail.c_str());
    }
    std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
