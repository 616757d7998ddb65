#ifndef POLYBELL_PBELL_HPP
#define POLYBELL_PBELL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polybell/polynomial.hpp"
#include "polybell/rational.hpp"
#include "polybell/triangle_cache.hpp"

namespace polybell
{

/// Independent ways of computing the p-Bell number B_{n,p}.
enum class PBellBackend {
    ExplicitStirling, ///< sum_k {n,k} / C(k+p,k)
    RecurrenceR3,     ///< column recurrence reaching into column p+1
    ZTriangle,        ///< three-term Z_{n,m}(p) triangle
    GenBernoulli,     ///< Bell numbers against generalized Bernoulli numbers
};

inline constexpr std::array<PBellBackend, 4> all_backends{
    PBellBackend::ExplicitStirling, PBellBackend::RecurrenceR3, PBellBackend::ZTriangle,
    PBellBackend::GenBernoulli};

/// "explicit", "r3", "ztriangle", "genbernoulli"
std::string_view to_string(PBellBackend b);
std::optional<PBellBackend> parse_backend(std::string_view name);

/// Two backends produced different values for the same cell.
class BackendMismatch : public std::runtime_error
{
public:
    BackendMismatch(std::size_t n, std::size_t p, PBellBackend a, Rational va, PBellBackend b, Rational vb);

    std::size_t n;
    std::size_t p;
    PBellBackend first;
    Rational first_value;
    PBellBackend second;
    Rational second_value;
};

Rational pbell_explicit(std::size_t n, std::size_t p, TriangleCache& cache = default_cache());
Rational pbell_r3(std::size_t n, std::size_t p, TriangleCache& cache = default_cache());
Rational pbell_z_triangle(std::size_t n, std::size_t p);
Rational pbell_gen_bernoulli(std::size_t n, std::size_t p, TriangleCache& cache = default_cache());

/// Dispatches to one backend. With cross_check set, every backend runs and a
/// disagreement raises BackendMismatch.
Rational pbell_number(std::size_t n, std::size_t p, PBellBackend backend = PBellBackend::ExplicitStirling,
                      bool cross_check = false, TriangleCache& cache = default_cache());

/// B_{0,p}, ..., B_{n_max,p} in one pass. ZTriangle produces the whole column
/// from a single triangle sweep; other backends fall back to per-cell calls.
std::vector<Rational> pbell_column(std::size_t n_max, std::size_t p, PBellBackend backend,
                                   TriangleCache& cache = default_cache());

/// B_{n,1} as the binomial convolution of Bell and Bernoulli numbers.
Rational pbell_ramanujan_p1(std::size_t n, TriangleCache& cache = default_cache());

/// B_{n,p}(x) = sum_k C(n,k) B_{k,p} x^{n-k}.
Polynomial pbell_poly(std::size_t n, std::size_t p, TriangleCache& cache = default_cache());

/// B_{n,p}(x) = sum_k S_n^k(x) / C(k+p,k), evaluated at x.
Rational pbell_poly_weighted(std::size_t n, std::size_t p, const Rational& x,
                             TriangleCache& cache = default_cache());

/// Z_{n,0}(x;p) from Z_{n+1,m} = (m+1)/(m+p+1) Z_{n,m+1} + (m+x) Z_{n,m}, Z_{0,m} = 1.
Rational zpoly_triangle(std::size_t n, std::size_t p, const Rational& x);

/// The triangle Z_{n,m}(p) for n + m <= n_max at fixed p.
class ZTable
{
public:
    ZTable(std::size_t p, std::size_t n_max);

    [[nodiscard]] std::size_t p() const { return p_; }
    [[nodiscard]] std::size_t n_max() const { return n_max_; }
    /// Requires n + m <= n_max.
    [[nodiscard]] const Rational& at(std::size_t n, std::size_t m) const;

private:
    std::size_t p_;
    std::size_t n_max_;
    std::vector<std::vector<Rational>> rows_; // rows_[n][m], m <= n_max - n
};

} // namespace polybell

#endif
