#ifndef POLYBELL_RATIONAL_HPP
#define POLYBELL_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polybell
{

using BigInt = mpz_class;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Serialized as "num/den", or "num" when integral.
class Rational
{
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T v) : value_(static_cast<long>(v))
    {
    }

    template <std::unsigned_integral T>
    Rational(T v) : value_(static_cast<unsigned long>(v))
    {
    }

    explicit Rational(const BigInt& v) : value_(v) {}

    /// Throws std::domain_error on a zero denominator.
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "num/den" or "num" (optional leading '-').
    /// Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    [[nodiscard]] double to_double() const { return value_.get_d(); }
    [[nodiscard]] std::string to_string() const;

    /// Bit length of the larger of |numerator| and denominator.
    [[nodiscard]] std::size_t bit_length() const;

    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a)
    {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_{0};
};

/// Exact binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);
/// x (x-1) ... (x-n+1).
Rational falling_factorial(const Rational& x, unsigned long n);
/// x (x+1) ... (x+n-1).
Rational rising_factorial(const Rational& x, unsigned long n);
/// base^e for e >= 0; 0^0 = 1.
Rational pow(const Rational& base, unsigned long e);

} // namespace polybell

template <>
struct std::hash<polybell::Rational> {
    std::size_t operator()(const polybell::Rational& r) const noexcept
    {
        return std::hash<std::string>{}(r.to_string());
    }
};

#endif
