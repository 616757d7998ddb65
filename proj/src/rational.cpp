#include "polybell/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace polybell
{

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

namespace
{

bool valid_integer_text(std::string_view s, bool allow_sign)
{
    if (s.empty()) {
        return false;
    }
    if (allow_sign && s.front() == '-') {
        s.remove_prefix(1);
    }
    return !s.empty()
           && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!valid_integer_text(num_text, true)) {
        throw std::invalid_argument("Rational::parse: malformed numerator in '" + std::string(text) + "'");
    }
    BigInt num(std::string(num_text), 10);
    if (slash == std::string_view::npos) {
        return Rational(num);
    }
    const auto den_text = text.substr(slash + 1);
    if (!valid_integer_text(den_text, false)) {
        throw std::invalid_argument("Rational::parse: malformed denominator in '" + std::string(text) + "'");
    }
    BigInt den(std::string(den_text), 10);
    if (den == 0) {
        throw std::invalid_argument("Rational::parse: zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::bit_length() const
{
    const std::size_t nb = sgn(value_) == 0 ? 0 : mpz_sizeinbase(value_.get_num_mpz_t(), 2);
    const std::size_t db = mpz_sizeinbase(value_.get_den_mpz_t(), 2);
    return std::max(nb, db);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    if (k > n) {
        return r;
    }
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational falling_factorial(const Rational& x, unsigned long n)
{
    Rational r(1);
    for (unsigned long i = 0; i < n; ++i) {
        r *= x - Rational(i);
    }
    return r;
}

Rational rising_factorial(const Rational& x, unsigned long n)
{
    Rational r(1);
    for (unsigned long i = 0; i < n; ++i) {
        r *= x + Rational(i);
    }
    return r;
}

Rational pow(const Rational& base, unsigned long e)
{
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), e);
    return Rational(num, den);
}

} // namespace polybell
