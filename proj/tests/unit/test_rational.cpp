#include "doctest.h"

#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "polybell/polynomial.hpp"
#include "polybell/rational.hpp"

using namespace polybell;

TEST_CASE("rational normalizes and serializes")
{
    CHECK(Rational(6, 4).to_string() == "3/2");
    CHECK(Rational(-6, 4).to_string() == "-3/2");
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(8, 4).to_string() == "2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(BigInt(3), BigInt(9)) == Rational(1, 3));
}

TEST_CASE("rational parse round-trips")
{
    for (const char* s : {"0", "1", "-1", "5/6", "-2057/42", "123456789012345678901234567891/7"}) {
        CHECK(Rational::parse(s).to_string() == s);
    }
    CHECK(Rational::parse("10/4").to_string() == "5/2");
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("zero denominators are rejected")
{
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    Rational r(1);
    CHECK_THROWS_AS(r /= Rational(0), std::domain_error);
}

TEST_CASE("arithmetic and ordering")
{
    const Rational a(1, 2);
    const Rational b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(b < a);
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(a.is_integer());
    CHECK(a.to_double() == doctest::Approx(0.5));
    std::ostringstream os;
    os << Rational(7, 20);
    CHECK(os.str() == "7/20");
}

TEST_CASE("hash agrees with equality")
{
    std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(3)};
    CHECK(s.size() == 2);
}

TEST_CASE("combinatorial helpers")
{
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(falling_factorial(Rational(5), 3) == Rational(60));
    CHECK(falling_factorial(Rational(2), 3) == Rational(0));
    CHECK(rising_factorial(Rational(3), 2) == Rational(12));
    CHECK(rising_factorial(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("bit length")
{
    CHECK(Rational(1).bit_length() == 1);
    CHECK(Rational(255, 2).bit_length() == 8);
    CHECK(Rational(1, 1024).bit_length() == 11);
}

TEST_CASE("polynomial basics")
{
    const Polynomial x = Polynomial::monomial(1);
    const Polynomial p = x * x + x * Rational(2) + Polynomial::constant(Rational(1)); // (x+1)^2
    CHECK(p.degree() == 2);
    CHECK(poly_eval(p, Rational(3)) == Rational(16));
    CHECK(p.derivative() == x * Rational(2) + Polynomial::constant(Rational(2)));
    CHECK(p.antiderivative().derivative() == p);
    CHECK(p.antiderivative().coeff(0) == Rational(0));
    CHECK(p.taylor_shift(Rational(-1)) == x * x);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == 0);
    CHECK(p.coeff(7) == Rational(0));
    CHECK(p.to_string() == "1 + 2*x + x^2");
}
