#include "polybell/numeric_bridge.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "polybell/parallel.hpp"
#include "polybell/pbell.hpp"

namespace polybell
{

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

RngStream RngStream::split(std::uint64_t index) const
{
    return RngStream(splitmix64(seed_ ^ splitmix64(index + 1)));
}

namespace
{

// Shortest text that reads back as the same double.
std::string fmt_double(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

using Gauss20 = boost::math::quadrature::gauss<double, 20>;

// Running mean / second central moment, mergeable in any grouping.
struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double v)
    {
        count += 1.0;
        const double d = v - mean;
        mean += d / count;
        m2 += d * (v - mean);
    }

    static Moments merge(const Moments& a, const Moments& b)
    {
        if (a.count == 0.0) {
            return b;
        }
        if (b.count == 0.0) {
            return a;
        }
        Moments r;
        r.count = a.count + b.count;
        const double d = b.mean - a.mean;
        r.mean = a.mean + d * b.count / r.count;
        r.m2 = a.m2 + b.m2 + d * d * a.count * b.count / r.count;
        return r;
    }

    [[nodiscard]] double variance() const { return count > 1.0 ? m2 / (count - 1.0) : 0.0; }
};

Moments pairwise_merge(std::vector<Moments> parts)
{
    if (parts.empty()) {
        return {};
    }
    while (parts.size() > 1) {
        std::vector<Moments> next;
        next.reserve((parts.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
            next.push_back(Moments::merge(parts[i], parts[i + 1]));
        }
        if (parts.size() % 2 == 1) {
            next.push_back(parts.back());
        }
        parts = std::move(next);
    }
    return parts.front();
}

constexpr std::uint64_t chunk_size = 1ULL << 16;

// Splits the sample budget into fixed chunks, one child stream per chunk.
template <class F>
Moments sample_moments(std::uint64_t samples, std::uint64_t seed, F&& observe)
{
    const std::uint64_t chunks = (samples + chunk_size - 1) / chunk_size;
    std::vector<Moments> parts(chunks);
    const RngStream root(seed);
    parallel_for(chunks, [&](std::size_t c) {
        RngStream rng = root.split(c);
        const std::uint64_t begin = c * chunk_size;
        const std::uint64_t end = std::min(samples, begin + chunk_size);
        Moments m;
        for (std::uint64_t i = begin; i < end; ++i) {
            m.push(observe(rng));
        }
        parts[c] = m;
    });
    return pairwise_merge(std::move(parts));
}

} // namespace

nlohmann::json NumericCheck::to_json() const
{
    return {
        {"kind", kind},
        {"params", params},
        {"estimate", estimate},
        {"target", target.to_string()},
        {"abs_error", abs_error},
        {"tolerance", tolerance},
        {"samples_or_terms", samples_or_terms},
        {"status", passed() ? "pass" : "fail"},
    };
}

double hyp1f1(double a, double b, double z, double tol, std::size_t max_terms)
{
    if (b <= 0.0 && b == std::floor(b)) {
        throw std::domain_error("hyp1f1: b must not be a nonpositive integer");
    }
    double term = 1.0;
    double sum = 1.0;
    for (std::size_t n = 0; n < max_terms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) / (b + dn) * z / (dn + 1.0);
        sum += term;
        if (term == 0.0 || std::abs(term) < tol * std::abs(sum)) {
            return sum;
        }
    }
    throw ConvergenceError("hyp1f1: term cap reached before convergence", sum, max_terms);
}

double lower_inc_gamma(double s, double x)
{
    if (s <= 0.0 || x < 0.0) {
        throw std::domain_error("lower_inc_gamma: requires s > 0 and x >= 0");
    }
    if (x == 0.0) {
        return 0.0;
    }
    double term = 1.0 / s;
    double sum = term;
    for (std::size_t k = 1; k < 100000; ++k) {
        term *= x / (s + static_cast<double>(k));
        sum += term;
        if (term < 1e-17 * sum) {
            break;
        }
    }
    return std::pow(x, s) * std::exp(-x) * sum;
}

namespace
{

// Shared driver for the two Dobinski sums. weight(k) multiplies base^n/k! * 1F1.
template <class Weight>
std::pair<double, std::size_t> dobinski_sum(std::size_t n, std::size_t p, double x, double tolerance, Weight weight)
{
    double sum = 0.0;
    double inv_kfact = 1.0;
    const double dn = static_cast<double>(n);
    for (std::size_t k = 0; k < 100000; ++k) {
        if (k > 0) {
            inv_kfact /= static_cast<double>(k);
        }
        const double dk = static_cast<double>(k);
        const double base = x + dk;
        const double h = hyp1f1(dk + 1.0, static_cast<double>(p) + dk + 1.0, -1.0);
        const double term = weight(k) * std::pow(base, dn) * inv_kfact * h;
        sum += term;
        // Tail bound: the weights are nonincreasing, h lies in [1/e, 1], so
        // successive terms shrink at least by r = e |1 + 1/|base||^n / (k+1).
        const double ab = std::abs(base);
        if (ab >= 1.0 && dk > std::abs(x)) {
            const double r = std::numbers::e * std::pow(1.0 + 1.0 / ab, dn) / (dk + 1.0);
            if (r < 0.5 && std::abs(term) * r / (1.0 - r) < tolerance * 1e-3) {
                return {sum, k + 1};
            }
        }
    }
    throw ConvergenceError("dobinski: series did not settle", sum, 100000);
}

} // namespace

NumericCheck dobinski_pbell(std::size_t n, std::size_t p, double tolerance, TriangleCache& cache)
{
    const double dp = static_cast<double>(p);
    auto [sum, terms] = dobinski_sum(n, p, 0.0, tolerance, [dp](std::size_t k) {
        // C(p+k,k)^{-1} = prod_{i=1}^{p} i / (k+i)
        double w = 1.0;
        for (double i = 1.0; i <= dp; i += 1.0) {
            w *= i / (static_cast<double>(k) + i);
        }
        return w;
    });
    NumericCheck c;
    c.kind = "dobinski";
    c.params = {{"n", std::to_string(n)}, {"p", std::to_string(p)}};
    c.target = pbell_number(n, p, PBellBackend::ExplicitStirling, false, cache);
    c.estimate = sum;
    c.abs_error = std::abs(sum - c.target.to_double());
    c.tolerance = tolerance;
    c.samples_or_terms = terms;
    return c;
}

NumericCheck dobinski_pbell_poly(std::size_t n, std::size_t p, const Rational& x, double tolerance,
                                 DobinskiWeight weight, TriangleCache& cache)
{
    const double dp = static_cast<double>(p);
    auto [sum, terms] = dobinski_sum(n, p, x.to_double(), tolerance, [dp, weight](std::size_t k) {
        if (weight == DobinskiWeight::BarePrefactor) {
            return dp;
        }
        double w = 1.0;
        for (double i = 1.0; i <= dp; i += 1.0) {
            w *= i / (static_cast<double>(k) + i);
        }
        return w;
    });
    NumericCheck c;
    c.kind = "dobinski-poly";
    c.params = {{"n", std::to_string(n)},
                {"p", std::to_string(p)},
                {"x", x.to_string()},
                {"weight", weight == DobinskiWeight::Beta ? "beta" : "bare"}};
    c.target = poly_eval(pbell_poly(n, p, cache), x);
    c.estimate = sum;
    c.abs_error = std::abs(sum - c.target.to_double());
    c.tolerance = tolerance;
    c.samples_or_terms = terms;
    return c;
}

double cesaro_integral(std::size_t n, std::size_t p, std::size_t panels)
{
    using cd = std::complex<double>;
    const double e = std::numbers::e;
    std::vector<double> inv_lfact(p + 1, 1.0);
    for (std::size_t l = 1; l <= p; ++l) {
        inv_lfact[l] = inv_lfact[l - 1] / static_cast<double>(l);
    }
    const auto integrand = [&](double theta) {
        const cd big_e = std::exp(std::exp(cd(0.0, theta)));
        const cd u = big_e - 1.0;
        cd val = std::exp(big_e) / std::pow(u, static_cast<int>(p));
        for (std::size_t l = 0; l < p; ++l) {
            val -= e * std::pow(u, static_cast<int>(l) - static_cast<int>(p)) * inv_lfact[l];
        }
        return val.imag() * std::sin(static_cast<double>(n) * theta);
    };
    const double h = std::numbers::pi / static_cast<double>(panels);
    double total = 0.0;
    for (std::size_t i = 0; i < panels; ++i) {
        const double a = h * static_cast<double>(i);
        total += Gauss20::integrate(integrand, a, a + h);
    }
    double scale = 2.0 / (std::numbers::pi * e);
    for (std::size_t i = 2; i <= n; ++i) {
        scale *= static_cast<double>(i);
    }
    for (std::size_t i = 2; i <= p; ++i) {
        scale *= static_cast<double>(i);
    }
    return scale * total;
}

NumericCheck cesaro_pbell(std::size_t n, std::size_t p, double tolerance, TriangleCache& cache)
{
    if (n == 0) {
        throw std::invalid_argument("cesaro_pbell: requires n >= 1");
    }
    std::size_t panels = 1;
    double prev = cesaro_integral(n, p, panels);
    double cur = prev;
    for (;;) {
        panels *= 2;
        if (panels > 4096) {
            throw ConvergenceError("cesaro_pbell: panel refinement did not converge", cur, panels / 2);
        }
        cur = cesaro_integral(n, p, panels);
        if (std::abs(cur - prev) < tolerance / 4.0) {
            break;
        }
        prev = cur;
    }
    NumericCheck c;
    c.kind = "cesaro";
    c.params = {{"n", std::to_string(n)}, {"p", std::to_string(p)}};
    c.target = pbell_number(n, p, PBellBackend::ExplicitStirling, false, cache);
    c.estimate = cur;
    c.abs_error = std::abs(cur - c.target.to_double());
    c.tolerance = tolerance;
    c.samples_or_terms = panels;
    return c;
}

std::uint64_t beta_poisson_sample(std::size_t p, RngStream& rng)
{
    // lambda = 1 - U^{1/p} inverts the Beta(1, p) CDF 1 - (1 - t)^p.
    const double u = rng.next_double();
    const double lambda = 1.0 - std::pow(u, 1.0 / static_cast<double>(p));
    // Poisson by inversion; lambda <= 1 keeps the loop short.
    const double v = rng.next_double();
    double prob = std::exp(-lambda);
    double cdf = prob;
    std::uint64_t k = 0;
    while (v >= cdf && k < 200) {
        ++k;
        prob *= lambda / static_cast<double>(k);
        cdf += prob;
    }
    return k;
}

NumericCheck mc_moment_check(std::size_t n, std::size_t p, const Rational& x, std::uint64_t samples,
                             std::uint64_t seed, TriangleCache& cache)
{
    const double xd = x.to_double();
    const double dn = static_cast<double>(n);
    const Moments m = sample_moments(samples, seed, [&](RngStream& rng) {
        const double z = static_cast<double>(beta_poisson_sample(p, rng));
        return std::pow(xd + z, dn);
    });
    NumericCheck c;
    c.kind = "mc";
    c.params = {{"n", std::to_string(n)},
                {"p", std::to_string(p)},
                {"x", x.to_string()},
                {"seed", std::to_string(seed)}};
    c.target = poly_eval(pbell_poly(n, p, cache), x);
    c.estimate = m.mean;
    c.abs_error = std::abs(m.mean - c.target.to_double());
    c.tolerance = samples > 0 ? 4.0 * std::sqrt(m.variance() / static_cast<double>(samples)) : 0.0;
    c.samples_or_terms = samples;
    return c;
}

bool MgfReport::matches_form_a_p_p1() const
{
    return std::abs(estimate - form_a_p_p1) <= ci_halfwidth;
}

bool MgfReport::matches_form_1_p1() const
{
    return std::abs(estimate - form_1_p1) <= ci_halfwidth;
}

nlohmann::json MgfReport::to_json() const
{
    return {
        {"kind", "mgf"},
        {"params", {{"p", std::to_string(p)}, {"t", fmt_double(t)}}},
        {"samples", samples},
        {"estimate", estimate},
        {"ci_halfwidth", ci_halfwidth},
        {"form_1F1(p;p+1;e^t-1)", {{"value", form_a_p_p1}, {"abs_error", std::abs(estimate - form_a_p_p1)},
                                   {"within_ci", matches_form_a_p_p1()}}},
        {"form_1F1(1;p+1;e^t-1)", {{"value", form_1_p1}, {"abs_error", std::abs(estimate - form_1_p1)},
                                   {"within_ci", matches_form_1_p1()}}},
        {"status", passed() ? "pass" : "fail"},
    };
}

MgfReport mgf_check(std::size_t p, double t, std::uint64_t samples, std::uint64_t seed)
{
    const Moments m = sample_moments(samples, seed, [&](RngStream& rng) {
        return std::exp(t * static_cast<double>(beta_poisson_sample(p, rng)));
    });
    const double w = std::expm1(t);
    const double dp = static_cast<double>(p);
    MgfReport r{};
    r.p = p;
    r.t = t;
    r.samples = samples;
    r.estimate = m.mean;
    r.ci_halfwidth = samples > 0 ? 4.0 * std::sqrt(m.variance() / static_cast<double>(samples)) : 0.0;
    r.form_a_p_p1 = hyp1f1(dp, dp + 1.0, w);
    r.form_1_p1 = hyp1f1(1.0, dp + 1.0, w);
    return r;
}

double pmf_closed_form(std::size_t p, std::size_t k)
{
    const double dp = static_cast<double>(p);
    const double dk = static_cast<double>(k);
    const double gamma_ratio = std::exp(std::lgamma(1.0 + dp) + std::lgamma(dp + dk) - std::lgamma(1.0 + dp + dk)
                                        - std::lgamma(dp) - std::lgamma(dk + 1.0));
    return gamma_ratio / std::numbers::e * hyp1f1(1.0, dp + dk + 1.0, 1.0);
}

double pmf_quadrature(std::size_t p, std::size_t k)
{
    const double dp = static_cast<double>(p);
    const double lkf = std::lgamma(static_cast<double>(k) + 1.0);
    const auto f = [&](double t) {
        return dp * std::pow(1.0 - t, dp - 1.0) * std::pow(t, static_cast<double>(k)) * std::exp(-t - lkf);
    };
    double total = 0.0;
    constexpr int panels = 8;
    for (int i = 0; i < panels; ++i) {
        total += Gauss20::integrate(f, i / double(panels), (i + 1) / double(panels));
    }
    return total;
}

bool PmfReport::matches_closed_form() const
{
    return std::abs(empirical - closed_form) <= sigma_multiplier * sigma;
}

bool PmfReport::matches_quadrature() const
{
    return std::abs(empirical - quadrature) <= sigma_multiplier * sigma;
}

nlohmann::json PmfReport::to_json() const
{
    return {
        {"kind", "pmf"},
        {"params", {{"p", std::to_string(p)}, {"k", std::to_string(k)}}},
        {"samples", samples},
        {"empirical", empirical},
        {"sigma", sigma},
        {"sigma_multiplier", sigma_multiplier},
        {"closed_form", {{"value", closed_form}, {"within", matches_closed_form()}}},
        {"quadrature", {{"value", quadrature}, {"within", matches_quadrature()}}},
    };
}

std::vector<PmfReport> pmf_check(std::size_t p, std::size_t k_max, std::uint64_t samples, std::uint64_t seed,
                                 double sigma_multiplier)
{
    const std::uint64_t chunks = (samples + chunk_size - 1) / chunk_size;
    std::vector<std::vector<std::uint64_t>> counts(chunks, std::vector<std::uint64_t>(k_max + 1, 0));
    const RngStream root(seed);
    parallel_for(chunks, [&](std::size_t c) {
        RngStream rng = root.split(c);
        const std::uint64_t begin = c * chunk_size;
        const std::uint64_t end = std::min(samples, begin + chunk_size);
        for (std::uint64_t i = begin; i < end; ++i) {
            const auto z = beta_poisson_sample(p, rng);
            if (z <= k_max) {
                ++counts[c][z];
            }
        }
    });
    std::vector<PmfReport> out;
    for (std::size_t k = 0; k <= k_max; ++k) {
        std::uint64_t hits = 0;
        for (const auto& row : counts) {
            hits += row[k];
        }
        const double nd = static_cast<double>(samples);
        const double q = nd > 0 ? static_cast<double>(hits) / nd : 0.0;
        out.push_back(PmfReport{p, k, samples, q, nd > 0 ? std::sqrt(q * (1.0 - q) / nd) : 0.0, sigma_multiplier,
                                pmf_closed_form(p, k), pmf_quadrature(p, k)});
    }
    return out;
}

} // namespace polybell
