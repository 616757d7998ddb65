#ifndef POLYBELL_NUMERIC_BRIDGE_HPP
#define POLYBELL_NUMERIC_BRIDGE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "polybell/rational.hpp"
#include "polybell/triangle_cache.hpp"

namespace polybell
{

/// A series or quadrature that did not settle within its term/panel budget.
class ConvergenceError : public std::runtime_error
{
public:
    ConvergenceError(const std::string& what, double partial, std::size_t terms)
        : std::runtime_error(what), partial_value(partial), terms_used(terms)
    {
    }

    double partial_value;
    std::size_t terms_used;
};

/// Reproducible random stream.
///
/// Each stream is a std::mt19937_64 whose seed is the SplitMix64 mix of the
/// stream's 64-bit seed. split(i) derives an independent child stream whose
/// seed is SplitMix64(seed ^ SplitMix64(i + 1)), so parallel work can be cut
/// into fixed chunks with one child per chunk and the result does not depend
/// on the thread count.
class RngStream
{
public:
    static constexpr std::string_view algorithm = "mt19937_64/splitmix64";

    explicit RngStream(std::uint64_t seed);

    [[nodiscard]] std::uint64_t seed() const { return seed_; }
    [[nodiscard]] RngStream split(std::uint64_t index) const;

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Outcome of comparing a floating-point estimate against an exact value.
struct NumericCheck {
    std::string kind;
    std::map<std::string, std::string> params;
    Rational target;
    double estimate = 0.0;
    double abs_error = 0.0;
    double tolerance = 0.0;
    std::uint64_t samples_or_terms = 0;

    [[nodiscard]] bool passed() const { return abs_error <= tolerance; }
    [[nodiscard]] nlohmann::json to_json() const;
};

/// 1F1(a; b; z) = sum_n (a)_n / (b)_n z^n / n!, summed until
/// |term| < tol * |partial|. Throws ConvergenceError past max_terms.
double hyp1f1(double a, double b, double z, double tol = 1e-17, std::size_t max_terms = 10000);

/// gamma(s, x) = x^s e^{-x} sum_k x^k / (s (s+1) ... (s+k)), s > 0, x >= 0.
double lower_inc_gamma(double s, double x);

/// Dobinski-type sum for B_{n,p}:
/// sum_k C(p+k,k)^{-1} 1F1(k+1; p+k+1; -1) k^n / k!.
NumericCheck dobinski_pbell(std::size_t n, std::size_t p, double tolerance = 1e-9,
                            TriangleCache& cache = default_cache());

enum class DobinskiWeight {
    /// p B(k+1, p) = C(p+k,k)^{-1}, which reduces to dobinski_pbell at x = 0.
    Beta,
    /// The bare factor p in front of the sum, with no beta-function weight.
    BarePrefactor,
};

/// Dobinski-type sum for B_{n,p}(x): sum_k w_k (x+k)^n / k! 1F1(k+1; p+k+1; -1).
NumericCheck dobinski_pbell_poly(std::size_t n, std::size_t p, const Rational& x, double tolerance = 1e-9,
                                 DobinskiWeight weight = DobinskiWeight::Beta,
                                 TriangleCache& cache = default_cache());

/// Contour-type integral for B_{n,p}:
/// (2 n! p! / (pi e)) Im int_0^pi [exp(E)/(E-1)^p - e sum_{l<p} (E-1)^{l-p}/l!] sin(n theta) d theta,
/// E = exp(e^{i theta}), by composite Gauss-Legendre panels refined by doubling
/// until successive estimates differ by less than tolerance / 4.
NumericCheck cesaro_pbell(std::size_t n, std::size_t p, double tolerance = 1e-6,
                          TriangleCache& cache = default_cache());

/// Raw quadrature value used by cesaro_pbell with a fixed panel count.
double cesaro_integral(std::size_t n, std::size_t p, std::size_t panels);

/// Draws Z ~ Poisson(lambda) with lambda ~ Beta(1, p).
std::uint64_t beta_poisson_sample(std::size_t p, RngStream& rng);

/// Sample moment of (x + Z)^n against B_{n,p}(x). Tolerance is
/// 4 * sample std / sqrt(samples).
NumericCheck mc_moment_check(std::size_t n, std::size_t p, const Rational& x, std::uint64_t samples,
                             std::uint64_t seed, TriangleCache& cache = default_cache());

/// Monte Carlo MGF of the beta-Poisson law against two closed forms.
struct MgfReport {
    std::size_t p;
    double t;
    std::uint64_t samples;
    double estimate;
    double ci_halfwidth; ///< 4 sigma
    double form_a_p_p1;  ///< 1F1(p; p+1; e^t - 1)
    double form_1_p1;    ///< 1F1(1; p+1; e^t - 1)

    [[nodiscard]] bool matches_form_a_p_p1() const;
    [[nodiscard]] bool matches_form_1_p1() const;
    [[nodiscard]] bool passed() const { return matches_form_a_p_p1() || matches_form_1_p1(); }
    [[nodiscard]] nlohmann::json to_json() const;
};

MgfReport mgf_check(std::size_t p, double t, std::uint64_t samples, std::uint64_t seed);

/// Empirical pmf P(Z = k) against the Gamma-ratio closed form
/// (1/(e k!)) Gamma(1+p) Gamma(p+k) / (Gamma(1+p+k) Gamma(p)) 1F1(1; p+k+1; 1)
/// and against direct quadrature of p (1-t)^{p-1} t^k e^{-t} / k! over [0, 1].
struct PmfReport {
    std::size_t p;
    std::size_t k;
    std::uint64_t samples;
    double empirical;
    double sigma;
    double sigma_multiplier;
    double closed_form;
    double quadrature;

    [[nodiscard]] bool matches_closed_form() const;
    [[nodiscard]] bool matches_quadrature() const;
    [[nodiscard]] nlohmann::json to_json() const;
};

std::vector<PmfReport> pmf_check(std::size_t p, std::size_t k_max, std::uint64_t samples, std::uint64_t seed,
                                 double sigma_multiplier = 3.0);

double pmf_closed_form(std::size_t p, std::size_t k);
double pmf_quadrature(std::size_t p, std::size_t k);

} // namespace polybell

#endif
