#ifndef POLYBELL_EGF_SERIES_HPP
#define POLYBELL_EGF_SERIES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "polybell/rational.hpp"

namespace polybell
{

/// Raised when a series operation's precondition fails (nonzero constant term
/// for exp, valuation violation for division, derivative of an order-0 series).
class SeriesError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Truncated exponential generating function sum_{k=0}^{N} a_k z^k / k!.
///
/// Coefficients are stored in the EGF convention: coeff(k) is a_k, not the
/// ordinary coefficient a_k / k!. Binary operations truncate to the smaller
/// of the two orders and the result carries its own order.
class EgfSeries
{
public:
    /// Zero series of order 0.
    EgfSeries() : coeffs_(1) {}
    /// Zero series of the given order.
    explicit EgfSeries(std::size_t order) : coeffs_(order + 1) {}
    /// coeffs.size() must be >= 1; order = coeffs.size() - 1.
    explicit EgfSeries(std::vector<Rational> coeffs);

    static EgfSeries constant(const Rational& c, std::size_t order);
    /// e^{c z}: a_k = c^k
    static EgfSeries exponential(const Rational& c, std::size_t order);
    /// e^z - 1
    static EgfSeries exp_minus_one(std::size_t order);
    /// z^m: a_m = m!, all others zero.
    static EgfSeries monomial(std::size_t m, std::size_t order);

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    [[nodiscard]] Rational& operator[](std::size_t k) { return coeffs_[k]; }

    /// Index of the first nonzero coefficient, or nullopt if all vanish.
    [[nodiscard]] std::optional<std::size_t> valuation() const;
    /// Copy truncated to a smaller order.
    [[nodiscard]] EgfSeries truncated(std::size_t order) const;
    /// Ordinary coefficient of z^k, i.e. a_k / k!.
    [[nodiscard]] Rational ordinary(std::size_t k) const;

    EgfSeries& operator+=(const EgfSeries& o);
    EgfSeries& operator-=(const EgfSeries& o);
    EgfSeries& operator*=(const Rational& c);

    friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
    friend EgfSeries operator-(EgfSeries a, const EgfSeries& b) { return a -= b; }
    friend EgfSeries operator*(EgfSeries a, const Rational& c) { return a *= c; }
    friend EgfSeries operator*(const Rational& c, EgfSeries a) { return a *= c; }
    friend EgfSeries operator-(EgfSeries a) { return a *= Rational(-1); }
    friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Binomial convolution c_n = sum_k C(n,k) a_k b_{n-k}.
EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b);
inline EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) { return egf_mul(a, b); }

/// a^e by repeated multiplication; a^0 is the constant 1 at a's order.
EgfSeries egf_pow(const EgfSeries& a, std::size_t e);

/// exp(a) via b_{n+1} = sum_k C(n,k) a_{k+1} b_{n-k}. Requires a_0 = 0.
EgfSeries egf_exp(const EgfSeries& a);

/// sum_k outer[k] (e^z - 1)^k truncated at order N. Only k <= N contribute
/// since (e^z - 1)^k has valuation k.
EgfSeries egf_compose_em1(std::span<const Rational> outer, std::size_t order);

/// Quotient num / den. Both operands are first shifted down by the valuation v
/// of den, so the result has order min(order) - v.
EgfSeries egf_div(const EgfSeries& num, const EgfSeries& den);

/// a'(z): coefficients shift left by one, order drops by one.
EgfSeries egf_derivative(const EgfSeries& a);

/// z^{-v} a(z), requires a_k = 0 for k < v. Order drops by v.
EgfSeries egf_shift_down(const EgfSeries& a, std::size_t v);

/// z^v a(z) at the same order (high terms truncated).
EgfSeries egf_shift_up(const EgfSeries& a, std::size_t v);

} // namespace polybell

#endif
