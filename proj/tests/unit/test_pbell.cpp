#include "doctest.h"

#include <string>
#include <vector>

#include "../common/oracles.hpp"
#include "polybell/pbell.hpp"
#include "polybell/special_numbers.hpp"

using namespace polybell;

namespace
{

const std::vector<std::vector<std::string>> kMatrix{
    {"1", "1", "1", "1"},
    {"1", "1/2", "1/3", "1/4"},
    {"2", "5/6", "1/2", "7/20"},
    {"5", "7/4", "14/15", "3/5"},
    {"15", "68/15", "13/6", "179/140"},
    {"52", "167/12", "127/21", "185/56"},
    {"203", "2057/42", "235/12", "8389/840"},
};

} // namespace

TEST_CASE("backend names")
{
    for (auto b : all_backends) {
        CHECK(parse_backend(to_string(b)) == b);
    }
    CHECK_FALSE(parse_backend("fast").has_value());
}

TEST_CASE("every backend reproduces the reference matrix")
{
    for (auto b : all_backends) {
        TriangleCache cache;
        for (std::size_t n = 0; n < kMatrix.size(); ++n) {
            for (std::size_t p = 0; p < 4; ++p) {
                CHECK_MESSAGE(pbell_number(n, p, b, false, cache).to_string() == kMatrix[n][p],
                              to_string(b), " n=", n, " p=", p);
            }
        }
    }
}

TEST_CASE("explicit backend against the set-partition oracle")
{
    TriangleCache cache;
    for (std::size_t n = 0; n <= 9; ++n) {
        for (std::size_t p = 0; p <= 6; ++p) {
            CHECK(pbell_explicit(n, p, cache) == oracle::pbell_by_partitions(n, p));
        }
    }
}

TEST_CASE("p = 0 gives the Bell numbers")
{
    TriangleCache cache;
    for (std::size_t n = 0; n <= 15; ++n) {
        CHECK(pbell_number(n, 0, PBellBackend::ZTriangle, true, cache) == bell_number(n, cache));
    }
}

TEST_CASE("B_{0,p} = 1")
{
    for (auto b : all_backends) {
        CHECK(pbell_number(0, 5, b) == Rational(1));
    }
}

TEST_CASE("columns match per-cell values")
{
    TriangleCache cache;
    for (auto b : all_backends) {
        const auto col = pbell_column(14, 3, b, cache);
        REQUIRE(col.size() == 15);
        for (std::size_t n = 0; n <= 14; ++n) {
            CHECK(col[n] == pbell_explicit(n, 3, cache));
        }
    }
}

TEST_CASE("cross-check detects a corrupted cache")
{
    TriangleCache cache;
    CHECK_NOTHROW(pbell_number(6, 2, PBellBackend::ExplicitStirling, true, cache));
    cache.inject_fault({Family::Stirling2, 6, 3}, Rational(91));
    CHECK_THROWS_AS(pbell_number(6, 2, PBellBackend::ExplicitStirling, true, cache), BackendMismatch);
    try {
        pbell_number(6, 2, PBellBackend::ExplicitStirling, true, cache);
    } catch (const BackendMismatch& e) {
        CHECK(e.n == 6);
        CHECK(e.p == 2);
        CHECK(e.first_value != e.second_value);
    }
}

TEST_CASE("Ramanujan form for p = 1")
{
    TriangleCache cache;
    for (std::size_t n = 0; n <= 15; ++n) {
        CHECK(pbell_ramanujan_p1(n, cache) == pbell_explicit(n, 1, cache));
    }
}

TEST_CASE("p-Bell polynomials")
{
    TriangleCache cache;
    CHECK(poly_eval(pbell_poly(2, 1, cache), Rational(1)) == Rational(17, 6));
    CHECK(pbell_poly(0, 4, cache) == Polynomial::constant(Rational(1)));
    for (std::size_t n = 0; n <= 4; ++n) {
        for (long p : {0L, 1L, 2L, 3L, 10L}) {
            CHECK(pbell_poly(n, static_cast<std::size_t>(p), cache) == oracle::displayed_pbell_poly(n, p));
        }
    }
    for (std::size_t n = 0; n <= 7; ++n) {
        for (std::size_t p = 0; p <= 3; ++p) {
            const Polynomial poly = pbell_poly(n, p, cache);
            CHECK(poly.degree() == n);
            CHECK(poly.coeff(n) == Rational(1));
            for (const Rational x : {Rational(0), Rational(1), Rational(-2, 3), Rational(5, 2)}) {
                CHECK(pbell_poly_weighted(n, p, x, cache) == poly_eval(poly, x));
                CHECK(zpoly_triangle(n, p, x) == poly_eval(poly, x));
            }
        }
    }
}

TEST_CASE("Z table")
{
    const ZTable z(2, 6);
    for (std::size_t m = 0; m <= 6; ++m) {
        CHECK(z.at(0, m) == Rational(1));
    }
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(z.at(n, 0) == pbell_explicit(n, 2));
    }
    // Z_{1,m} = (m+1)/(m+3) + m
    CHECK(z.at(1, 2) == Rational(3, 5) + Rational(2));
}
