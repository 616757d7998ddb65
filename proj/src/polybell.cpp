#include "polybell/polybell.hpp"

#include <stdexcept>
#include <vector>

#include "polybell/special_numbers.hpp"

namespace polybell
{

Rational polybell_pos(std::size_t n, std::size_t p, TriangleCache& cache)
{
    return pbell_number(n, p, PBellBackend::ExplicitStirling, false, cache) / Rational(factorial(p));
}

Rational polybell_neg(std::size_t n, std::size_t p, TriangleCache& cache)
{
    Rational s;
    for (std::size_t k = p; k <= n; ++k) {
        s += Rational(factorial(k) / factorial(k - p)) * stirling2(n, k, cache);
    }
    return s;
}

BigInt polybell_neg_integer(std::size_t n, std::size_t p, TriangleCache& cache)
{
    const Rational v = polybell_neg(n, p, cache);
    if (!v.is_integer()) {
        throw std::logic_error("polybell_neg_integer: non-integral value " + v.to_string());
    }
    return v.numerator();
}

Rational polybell_neg_derivative(std::size_t n, std::size_t p, TriangleCache& cache)
{
    Rational s;
    for (std::size_t j = p; j <= n; ++j) {
        s += Rational(binomial(n, j)) * stirling2(j, p, cache) * bell_number(n - j, cache);
    }
    return s * Rational(factorial(p));
}

Polynomial polybell_neg_row_poly(std::size_t n, TriangleCache& cache)
{
    std::vector<Rational> c(n + 1);
    for (std::size_t p = 0; p <= n; ++p) {
        c[p] = polybell_neg(n, p, cache) / Rational(factorial(p));
    }
    return Polynomial(std::move(c));
}

PolyBellValue polybell_value(std::size_t n, long upper_index, TriangleCache& cache)
{
    if (upper_index >= 0) {
        return {n, upper_index, polybell_pos(n, static_cast<std::size_t>(upper_index), cache)};
    }
    return {n, upper_index, polybell_neg(n, static_cast<std::size_t>(-upper_index), cache)};
}

Polynomial polybell_poly(std::size_t n, std::size_t p, TriangleCache& cache)
{
    return pbell_poly(n, p, cache) * Rational(BigInt(1), factorial(p));
}

Rational pbell_iterated_integral(std::size_t n, std::size_t p, TriangleCache& cache)
{
    Polynomial f = bell_poly(n, cache);
    for (std::size_t i = 0; i < p; ++i) {
        f = f.antiderivative();
    }
    return Rational(factorial(p)) * poly_eval(f, Rational(1));
}

DualityWitness duality_counterexample(TriangleCache& cache)
{
    // For 1 <= p < n, B_p^{(-n)} = 0 while B_n^{(-p)} >= {n,n} > 0, so the scan
    // stops at the first off-diagonal cell.
    for (std::size_t n = 1;; ++n) {
        for (std::size_t p = 1; p < n; ++p) {
            Rational lhs = polybell_neg(n, p, cache);
            Rational rhs = polybell_neg(p, n, cache);
            if (lhs != rhs) {
                return {n, p, std::move(lhs), std::move(rhs)};
            }
        }
    }
}

} // namespace polybell
