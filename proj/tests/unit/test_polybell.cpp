#include "doctest.h"

#include <stdexcept>

#include "../common/oracles.hpp"
#include "polybell/polybell.hpp"
#include "polybell/special_numbers.hpp"

using namespace polybell;

namespace
{

// B_n^{(-p)} counts ordered selections of p blocks from set partitions:
// sum_k {n,k} k!/(k-p)!.
Rational neg_by_partitions(std::size_t n, std::size_t p)
{
    const auto counts = oracle::partitions_by_blocks(n);
    Rational total;
    for (std::size_t k = p; k <= n; ++k) {
        Rational ff(1);
        for (std::size_t j = 0; j < p; ++j) {
            ff *= Rational(k - j);
        }
        total += Rational(counts[k]) * ff;
    }
    return total;
}

} // namespace

TEST_CASE("negative upper index: reference values")
{
    CHECK(polybell_neg(1, 1) == Rational(1));
    CHECK(polybell_neg(2, 1) == Rational(3));
    CHECK(polybell_neg(3, 1) == Rational(10));
    CHECK(polybell_neg(5, 2) == Rational(320));
    CHECK(polybell_neg(9, 4) == Rational(2424744));
    CHECK(polybell_neg(4, 3) == Rational(60));
    CHECK(polybell_neg(6, 2) == Rational(1712));
    CHECK(polybell_neg(3, 5) == Rational(0));
}

TEST_CASE("negative upper index against enumeration and derivative form")
{
    TriangleCache cache;
    for (std::size_t n = 0; n <= 9; ++n) {
        for (std::size_t p = 0; p <= n + 1; ++p) {
            CHECK(polybell_neg(n, p, cache) == neg_by_partitions(n, p));
            CHECK(polybell_neg_derivative(n, p, cache) == neg_by_partitions(n, p));
            CHECK(polybell_neg_integer(n, p, cache) == neg_by_partitions(n, p).numerator());
        }
    }
}

TEST_CASE("row polynomial is phi_n(1 + y)")
{
    TriangleCache cache;
    CHECK(polybell_neg_row_poly(2, cache).to_string("y") == "2 + 3*y + y^2");
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(polybell_neg_row_poly(n, cache) == bell_poly(n, cache).taylor_shift(Rational(1)));
    }
}

TEST_CASE("positive upper index")
{
    TriangleCache cache;
    CHECK(polybell_pos(2, 1, cache) == Rational(5, 6));
    CHECK(polybell_pos(2, 2, cache) == Rational(1, 4));
    CHECK(polybell_pos(0, 3, cache) == Rational(1, 6));
    CHECK(polybell_poly(1, 2, cache) == pbell_poly(1, 2, cache) * Rational(1, 2));
}

TEST_CASE("signed dispatch")
{
    const auto neg = polybell_value(7, -3);
    CHECK(neg.value == Rational(21336));
    CHECK(neg.upper_index == -3);
    CHECK(polybell_value(6, 1).value == Rational(2057, 42));
    CHECK(polybell_value(4, 0).value == Rational(15));
}

TEST_CASE("iterated integral of phi_n")
{
    TriangleCache cache;
    for (std::size_t n = 0; n <= 10; ++n) {
        for (std::size_t p = 0; p <= 5; ++p) {
            CHECK(pbell_iterated_integral(n, p, cache) == pbell_explicit(n, p, cache));
        }
    }
}

TEST_CASE("duality fails at (2,1)")
{
    const DualityWitness w = duality_counterexample();
    CHECK(w.n == 2);
    CHECK(w.p == 1);
    CHECK(w.lhs == Rational(3));
    CHECK(w.rhs == Rational(0));
}
