#ifndef POLYBELL_SPECIAL_NUMBERS_HPP
#define POLYBELL_SPECIAL_NUMBERS_HPP

#include <cstddef>

#include "polybell/polynomial.hpp"
#include "polybell/rational.hpp"
#include "polybell/triangle_cache.hpp"

namespace polybell
{

/// Signed Stirling number of the first kind s(n,k), from
/// s(n+1,k) = s(n,k-1) - n s(n,k).
Rational stirling1(std::size_t n, std::size_t k, TriangleCache& cache = default_cache());

/// Stirling number of the second kind {n,k}, from {n+1,k} = k{n,k} + {n,k-1}.
Rational stirling2(std::size_t n, std::size_t k, TriangleCache& cache = default_cache());

/// r-Stirling number in shifted indexing: returns {n+r, k+r}_r, the
/// coefficient of z^n/n! in e^{rz}(e^z-1)^k/k!.
Rational r_stirling2(std::size_t n, std::size_t k, std::size_t r, TriangleCache& cache = default_cache());

/// S_n^k(x) = sum_i C(n,i) {i,k} x^{n-i}.
Polynomial weighted_stirling_poly(std::size_t n, std::size_t k, TriangleCache& cache = default_cache());

/// W_{m,r}(n,k) = m^{n-k} S_n^k(r/m). Requires m >= 1.
Rational whitney2(std::size_t n, std::size_t k, std::size_t m, std::size_t r,
                  TriangleCache& cache = default_cache());

/// B_n from z/(e^z-1), so B_1 = -1/2.
Rational bernoulli(std::size_t n, TriangleCache& cache = default_cache());

/// B_n^{(alpha)}: coefficient of z^n/n! in (z/(e^z-1))^alpha, integer alpha >= 0.
Rational gen_bernoulli(std::size_t n, std::size_t alpha, TriangleCache& cache = default_cache());

/// phi_n(x) = sum_k {n,k} x^k.
Polynomial bell_poly(std::size_t n, TriangleCache& cache = default_cache());

/// phi_n = phi_n(1).
Rational bell_number(std::size_t n, TriangleCache& cache = default_cache());

} // namespace polybell

#endif
