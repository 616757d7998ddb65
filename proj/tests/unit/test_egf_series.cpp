#include "doctest.h"

#include <random>
#include <vector>

#include "polybell/egf_series.hpp"

using namespace polybell;

namespace
{

EgfSeries random_series(std::mt19937_64& rng, std::size_t order, bool zero_constant)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    EgfSeries s(order);
    for (std::size_t k = zero_constant ? 1 : 0; k <= order; ++k) {
        s[k] = Rational(num(rng), den(rng));
    }
    return s;
}

} // namespace

TEST_CASE("factories")
{
    const auto e = EgfSeries::exponential(Rational(2), 5);
    for (std::size_t k = 0; k <= 5; ++k) {
        CHECK(e[k] == pow(Rational(2), k));
    }
    const auto w = EgfSeries::exp_minus_one(4);
    CHECK(w[0] == Rational(0));
    CHECK(w[3] == Rational(1));
    const auto m = EgfSeries::monomial(2, 4); // z^2
    CHECK(m[2] == Rational(2));
    CHECK(m[1] == Rational(0));
    CHECK(m.ordinary(2) == Rational(1));
    CHECK(EgfSeries::constant(Rational(3), 2)[0] == Rational(3));
}

TEST_CASE("exp of e^z - 1 gives the Bell numbers")
{
    const auto b = egf_exp(EgfSeries::exp_minus_one(10));
    const std::vector<long> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (std::size_t k = 0; k <= 10; ++k) {
        CHECK(b[k] == Rational(bell[k]));
    }
}

TEST_CASE("mixed orders truncate to the smaller")
{
    const auto a = EgfSeries::exponential(Rational(1), 3);
    const auto b = EgfSeries::exponential(Rational(1), 6);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK((a * b)[3] == Rational(8));
}

TEST_CASE("exp rejects a nonzero constant term")
{
    CHECK_THROWS_AS(egf_exp(EgfSeries::exponential(Rational(1), 3)), SeriesError);
}

TEST_CASE("division by a series with zero leading part")
{
    CHECK_THROWS_AS(egf_div(EgfSeries::constant(Rational(1), 3), EgfSeries(3)), SeriesError);
    // (e^z - 1) / (e^z - 1) = 1, one order lost to the valuation shift
    const auto w = EgfSeries::exp_minus_one(6);
    const auto q = egf_div(w, w);
    CHECK(q.order() == 5);
    CHECK(q == EgfSeries::constant(Rational(1), 5));
    CHECK_THROWS_AS(egf_derivative(EgfSeries(0)), SeriesError);
}

TEST_CASE("property: exp(a) exp(-a) = 1")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 8, true);
        CHECK(egf_exp(a) * egf_exp(-a) == EgfSeries::constant(Rational(1), 8));
    }
}

TEST_CASE("property: (exp a)' = a' exp a")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 8, true);
        const auto ea = egf_exp(a);
        CHECK(egf_derivative(ea) == egf_derivative(a) * ea);
    }
}

TEST_CASE("property: division inverts multiplication")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 7, false);
        auto b = random_series(rng, 7, false);
        if (b[0].is_zero()) {
            b[0] = Rational(1);
        }
        CHECK(egf_div(a * b, b) == a);
    }
}

TEST_CASE("property: multiplication is commutative and pow matches repeated products")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_series(rng, 6, false);
        const auto b = random_series(rng, 6, false);
        CHECK(a * b == b * a);
        CHECK(egf_pow(a, 3) == a * a * a);
        CHECK(egf_pow(a, 0) == EgfSeries::constant(Rational(1), 6));
    }
}

TEST_CASE("composition with e^z - 1")
{
    // outer = 1/k! reproduces exp(e^z - 1)
    std::vector<Rational> outer;
    for (std::size_t k = 0; k <= 9; ++k) {
        outer.emplace_back(BigInt(1), factorial(k));
    }
    CHECK(egf_compose_em1(outer, 9) == egf_exp(EgfSeries::exp_minus_one(9)));
    // outer = [0, 1] gives e^z - 1 itself
    const std::vector<Rational> lin{Rational(0), Rational(1)};
    CHECK(egf_compose_em1(lin, 5) == EgfSeries::exp_minus_one(5));
}

TEST_CASE("shift up and down")
{
    const auto e = EgfSeries::exponential(Rational(1), 6);
    const auto up = egf_shift_up(e, 2); // z^2 e^z
    CHECK(up.order() == 6);
    CHECK(up[2] == Rational(2));
    CHECK(up[3] == Rational(6));
    CHECK(egf_shift_down(up, 2) == e.truncated(4));
    CHECK_THROWS_AS(egf_shift_down(e, 1), SeriesError);
    CHECK(up.valuation() == 2u);
    CHECK_FALSE(EgfSeries(3).valuation().has_value());
}
