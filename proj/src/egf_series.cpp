#include "polybell/egf_series.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace polybell
{

EgfSeries::EgfSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw SeriesError("EgfSeries: coefficient sequence must be nonempty");
    }
}

EgfSeries EgfSeries::constant(const Rational& c, std::size_t order)
{
    EgfSeries s(order);
    s[0] = c;
    return s;
}

EgfSeries EgfSeries::exponential(const Rational& c, std::size_t order)
{
    EgfSeries s(order);
    Rational p(1);
    for (std::size_t k = 0; k <= order; ++k) {
        s[k] = p;
        p *= c;
    }
    return s;
}

EgfSeries EgfSeries::exp_minus_one(std::size_t order)
{
    EgfSeries s(order);
    for (std::size_t k = 1; k <= order; ++k) {
        s[k] = Rational(1);
    }
    return s;
}

EgfSeries EgfSeries::monomial(std::size_t m, std::size_t order)
{
    EgfSeries s(order);
    if (m <= order) {
        s[m] = Rational(factorial(m));
    }
    return s;
}

std::optional<std::size_t> EgfSeries::valuation() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) {
            return k;
        }
    }
    return std::nullopt;
}

EgfSeries EgfSeries::truncated(std::size_t order) const
{
    const std::size_t n = std::min(order, this->order());
    return EgfSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1)));
}

Rational EgfSeries::ordinary(std::size_t k) const
{
    return coeffs_[k] / Rational(factorial(k));
}

EgfSeries& EgfSeries::operator+=(const EgfSeries& o)
{
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    return *this;
}

EgfSeries& EgfSeries::operator-=(const EgfSeries& o)
{
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    return *this;
}

EgfSeries& EgfSeries::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

namespace
{

// Row n of Pascal's triangle as Rationals.
std::vector<Rational> binomial_row(std::size_t n)
{
    std::vector<Rational> row;
    row.reserve(n + 1);
    BigInt c = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        row.emplace_back(c);
        c = c * static_cast<unsigned long>(n - k) / static_cast<unsigned long>(k + 1);
    }
    return row;
}

} // namespace

EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    EgfSeries c(order);
    for (std::size_t n = 0; n <= order; ++n) {
        const auto row = binomial_row(n);
        Rational acc;
        for (std::size_t k = 0; k <= n; ++k) {
            if (a[k].is_zero() || b[n - k].is_zero()) {
                continue;
            }
            acc += row[k] * a[k] * b[n - k];
        }
        c[n] = std::move(acc);
    }
    return c;
}

EgfSeries egf_pow(const EgfSeries& a, std::size_t e)
{
    EgfSeries r = EgfSeries::constant(Rational(1), a.order());
    for (std::size_t i = 0; i < e; ++i) {
        r = egf_mul(r, a);
    }
    return r;
}

EgfSeries egf_exp(const EgfSeries& a)
{
    if (!a[0].is_zero()) {
        throw SeriesError("egf_exp: constant term must be zero, got " + a[0].to_string());
    }
    const std::size_t order = a.order();
    EgfSeries b(order);
    b[0] = Rational(1);
    for (std::size_t n = 0; n < order; ++n) {
        const auto row = binomial_row(n);
        Rational acc;
        for (std::size_t k = 0; k <= n; ++k) {
            if (a[k + 1].is_zero()) {
                continue;
            }
            acc += row[k] * a[k + 1] * b[n - k];
        }
        b[n + 1] = std::move(acc);
    }
    return b;
}

EgfSeries egf_compose_em1(std::span<const Rational> outer, std::size_t order)
{
    const EgfSeries w = EgfSeries::exp_minus_one(order);
    EgfSeries power = EgfSeries::constant(Rational(1), order);
    EgfSeries result(order);
    const std::size_t kmax = std::min(outer.size(), order + 1);
    for (std::size_t k = 0; k < kmax; ++k) {
        if (k > 0) {
            power = egf_mul(power, w);
        }
        if (!outer[k].is_zero()) {
            result += power * outer[k];
        }
    }
    return result;
}

EgfSeries egf_shift_down(const EgfSeries& a, std::size_t v)
{
    if (v > a.order()) {
        throw SeriesError("egf_shift_down: shift exceeds series order");
    }
    for (std::size_t k = 0; k < v; ++k) {
        if (!a[k].is_zero()) {
            throw SeriesError("egf_shift_down: coefficient " + std::to_string(k) + " is nonzero");
        }
    }
    // a_{m+v} z^{m+v}/(m+v)! = [a_{m+v} m!/(m+v)!] z^m/m!
    EgfSeries r(a.order() - v);
    for (std::size_t m = 0; m <= r.order(); ++m) {
        r[m] = a[m + v] / Rational(factorial(m + v) / factorial(m));
    }
    return r;
}

EgfSeries egf_shift_up(const EgfSeries& a, std::size_t v)
{
    EgfSeries r(a.order());
    for (std::size_t m = 0; m + v <= a.order(); ++m) {
        r[m + v] = a[m] * Rational(factorial(m + v) / factorial(m));
    }
    return r;
}

EgfSeries egf_div(const EgfSeries& num, const EgfSeries& den)
{
    const std::size_t order = std::min(num.order(), den.order());
    const EgfSeries a = num.truncated(order);
    const EgfSeries b = den.truncated(order);
    const auto v = b.valuation();
    if (!v) {
        throw SeriesError("egf_div: denominator vanishes to order " + std::to_string(order));
    }
    const auto vn = a.valuation();
    if (vn && *vn < *v) {
        throw SeriesError("egf_div: numerator valuation " + std::to_string(*vn)
                          + " is below denominator valuation " + std::to_string(*v)
                          + "; quotient is not a power series");
    }
    const EgfSeries as = egf_shift_down(a, *v);
    const EgfSeries bs = egf_shift_down(b, *v);
    EgfSeries q(as.order());
    for (std::size_t n = 0; n <= q.order(); ++n) {
        const auto row = binomial_row(n);
        Rational acc = as[n];
        for (std::size_t k = 0; k < n; ++k) {
            if (q[k].is_zero() || bs[n - k].is_zero()) {
                continue;
            }
            acc -= row[k] * q[k] * bs[n - k];
        }
        q[n] = acc / bs[0];
    }
    return q;
}

EgfSeries egf_derivative(const EgfSeries& a)
{
    if (a.order() == 0) {
        throw SeriesError("egf_derivative: order-0 series has no derivative coefficients");
    }
    return EgfSeries(std::vector<Rational>(a.coeffs().begin() + 1, a.coeffs().end()));
}

} // namespace polybell
