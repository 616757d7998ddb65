#include "polybell/special_numbers.hpp"

#include <stdexcept>
#include <vector>

#include "polybell/egf_series.hpp"

namespace polybell
{

namespace
{

CacheKey key(Family f, std::size_t row, std::size_t col, std::size_t param = 0)
{
    return {f, static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), static_cast<std::uint32_t>(param)};
}

} // namespace

Rational stirling1(std::size_t n, std::size_t k, TriangleCache& cache)
{
    if (k > n) {
        return Rational(0);
    }
    if (k == n) {
        return Rational(1);
    }
    if (k == 0) {
        return Rational(0);
    }
    return cache.get_or_compute(key(Family::Stirling1, n, k), [&] {
        return stirling1(n - 1, k - 1, cache) - Rational(n - 1) * stirling1(n - 1, k, cache);
    });
}

Rational stirling2(std::size_t n, std::size_t k, TriangleCache& cache)
{
    if (k > n) {
        return Rational(0);
    }
    if (k == n) {
        return Rational(1);
    }
    if (k == 0) {
        return Rational(0);
    }
    return cache.get_or_compute(key(Family::Stirling2, n, k), [&] {
        return Rational(k) * stirling2(n - 1, k, cache) + stirling2(n - 1, k - 1, cache);
    });
}

Rational r_stirling2(std::size_t n, std::size_t k, std::size_t r, TriangleCache& cache)
{
    // T(n,k) = {n+r, k+r}_r satisfies T(n,k) = (k+r) T(n-1,k) + T(n-1,k-1)
    // with T(0,k) = [k = 0].
    if (k > n) {
        return Rational(0);
    }
    if (n == 0) {
        return Rational(1);
    }
    if (k == n) {
        return Rational(1);
    }
    return cache.get_or_compute(key(Family::RStirling2, n, k, r), [&] {
        Rational v = Rational(k + r) * r_stirling2(n - 1, k, r, cache);
        if (k > 0) {
            v += r_stirling2(n - 1, k - 1, r, cache);
        }
        return v;
    });
}

Polynomial weighted_stirling_poly(std::size_t n, std::size_t k, TriangleCache& cache)
{
    std::vector<Rational> c(n + 1);
    for (std::size_t i = k; i <= n; ++i) {
        c[n - i] = Rational(binomial(n, i)) * stirling2(i, k, cache);
    }
    return Polynomial(std::move(c));
}

Rational whitney2(std::size_t n, std::size_t k, std::size_t m, std::size_t r, TriangleCache& cache)
{
    if (m == 0) {
        throw std::invalid_argument("whitney2: m must be positive");
    }
    if (k > n) {
        return Rational(0);
    }
    const Rational x = Rational(r) / Rational(m);
    return pow(Rational(m), n - k) * poly_eval(weighted_stirling_poly(n, k, cache), x);
}

Rational gen_bernoulli(std::size_t n, std::size_t alpha, TriangleCache& cache)
{
    if (alpha == 0) {
        return Rational(n == 0 ? 1 : 0);
    }
    if (auto hit = cache.find(key(Family::GenBernoulli, n, alpha))) {
        return *hit;
    }
    // Fill a block of the column at once; orders are rounded up so repeated
    // calls with growing n do not redo the series work every time.
    std::size_t order = 16;
    while (order < n) {
        order *= 2;
    }
    const EgfSeries z = EgfSeries::monomial(1, order + 1);
    const EgfSeries base = egf_div(z, EgfSeries::exp_minus_one(order + 1));
    const EgfSeries power = egf_pow(base, alpha);
    for (std::size_t i = 0; i <= order; ++i) {
        cache.insert(key(Family::GenBernoulli, i, alpha), power[i]);
    }
    return *cache.find(key(Family::GenBernoulli, n, alpha));
}

Rational bernoulli(std::size_t n, TriangleCache& cache)
{
    return gen_bernoulli(n, 1, cache);
}

Polynomial bell_poly(std::size_t n, TriangleCache& cache)
{
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        c[k] = stirling2(n, k, cache);
    }
    return Polynomial(std::move(c));
}

Rational bell_number(std::size_t n, TriangleCache& cache)
{
    Rational s;
    for (std::size_t k = 0; k <= n; ++k) {
        s += stirling2(n, k, cache);
    }
    return s;
}

} // namespace polybell
