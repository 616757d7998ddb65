#ifndef POLYBELL_POLYBELL_HPP
#define POLYBELL_POLYBELL_HPP

#include <cstddef>

#include "polybell/pbell.hpp"
#include "polybell/polynomial.hpp"
#include "polybell/rational.hpp"
#include "polybell/triangle_cache.hpp"

namespace polybell
{

/// Poly-Bell number with a signed upper index.
struct PolyBellValue {
    std::size_t n;
    long upper_index;
    Rational value;
};

/// B_n^{(p)} = B_{n,p} / p! for p >= 0.
Rational polybell_pos(std::size_t n, std::size_t p, TriangleCache& cache = default_cache());

/// B_n^{(-p)} = sum_{k=p}^{n} k!/(k-p)! {n,k}.
Rational polybell_neg(std::size_t n, std::size_t p, TriangleCache& cache = default_cache());

/// Same as polybell_neg but returned as an integer; throws std::logic_error
/// if the value is not integral.
BigInt polybell_neg_integer(std::size_t n, std::size_t p, TriangleCache& cache = default_cache());

/// p! sum_j C(n,j) {j,p} phi_{n-j}, i.e. the p-th derivative of phi_n at 1.
Rational polybell_neg_derivative(std::size_t n, std::size_t p, TriangleCache& cache = default_cache());

/// sum_p B_n^{(-p)} y^p / p!, a polynomial of degree n in y.
Polynomial polybell_neg_row_poly(std::size_t n, TriangleCache& cache = default_cache());

/// Dispatch on the sign of upper_index.
PolyBellValue polybell_value(std::size_t n, long upper_index, TriangleCache& cache = default_cache());

/// B_n^{(p)}(x) = B_{n,p}(x) / p!.
Polynomial polybell_poly(std::size_t n, std::size_t p, TriangleCache& cache = default_cache());

/// p! times the p-fold antiderivative (from 0) of phi_n evaluated at 1.
Rational pbell_iterated_integral(std::size_t n, std::size_t p, TriangleCache& cache = default_cache());

struct DualityWitness {
    std::size_t n;
    std::size_t p;
    Rational lhs; ///< B_n^{(-p)}
    Rational rhs; ///< B_p^{(-n)}
};

/// First (n, p) with n, p >= 1, n != p, scanning n then p ascending, where
/// B_n^{(-p)} != B_p^{(-n)}.
DualityWitness duality_counterexample(TriangleCache& cache = default_cache());

} // namespace polybell

#endif
