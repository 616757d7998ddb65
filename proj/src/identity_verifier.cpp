#include "polybell/identity_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "polybell/numeric_bridge.hpp"
#include "polybell/polybell.hpp"
#include "polybell/special_numbers.hpp"

namespace polybell
{

nlohmann::json CheckReport::to_json() const
{
    nlohmann::json j;
    j["id"] = identity_id;
    j["params"] = params;
    j["status"] = passed() ? "pass" : "fail";
    if (detail) {
        j["detail"] = {{"index", detail->index}, {"lhs", detail->lhs}, {"rhs", detail->rhs}, {"note", detail->note}};
    } else {
        j["detail"] = nullptr;
    }
    return j;
}

std::string CheckReport::to_line() const
{
    std::ostringstream os;
    os << (passed() ? "PASS " : "FAIL ") << identity_id;
    for (const auto& [k, v] : params) {
        os << ' ' << k << '=' << v;
    }
    if (detail) {
        os << " at [";
        for (std::size_t i = 0; i < detail->index.size(); ++i) {
            os << (i ? "," : "") << detail->index[i];
        }
        os << "]: lhs=" << detail->lhs << " rhs=" << detail->rhs;
        if (!detail->note.empty()) {
            os << " (" << detail->note << ")";
        }
    }
    return os.str();
}

std::optional<Difference> first_difference(const EgfSeries& lhs, const EgfSeries& rhs)
{
    const std::size_t order = std::min(lhs.order(), rhs.order());
    for (std::size_t k = 0; k <= order; ++k) {
        if (lhs[k] != rhs[k]) {
            return Difference{{k}, lhs[k].to_string(), rhs[k].to_string(), {}};
        }
    }
    return std::nullopt;
}

std::optional<Difference> first_difference(const std::vector<EgfSeries>& lhs, const std::vector<EgfSeries>& rhs)
{
    const std::size_t slices = std::min(lhs.size(), rhs.size());
    for (std::size_t q = 0; q < slices; ++q) {
        if (auto d = first_difference(lhs[q], rhs[q])) {
            d->index.insert(d->index.begin(), q);
            return d;
        }
    }
    return std::nullopt;
}

namespace
{

std::string str(std::size_t v)
{
    return std::to_string(v);
}

CheckReport make_report(std::string id, std::map<std::string, std::string> params, std::optional<Difference> d)
{
    return CheckReport{std::move(id), std::move(params), std::move(d)};
}

Rational inv_binomial(std::size_t n, std::size_t k)
{
    return Rational(BigInt(1), binomial(n, k));
}

Rational B(std::size_t n, std::size_t p, const VerifyContext& ctx)
{
    return pbell_number(n, p, ctx.backend, false, *ctx.cache);
}

std::map<std::string, std::string> series_params(std::size_t p, std::size_t order, const VerifyContext& ctx)
{
    return {{"p", str(p)}, {"order", str(order)}, {"backend", std::string(to_string(ctx.backend))}};
}

Difference cell_difference(std::vector<std::size_t> index, const Rational& lhs, const Rational& rhs,
                           std::string note = {})
{
    return Difference{std::move(index), lhs.to_string(), rhs.to_string(), std::move(note)};
}

void require_positive(std::size_t p, const char* who)
{
    if (p == 0) {
        throw std::invalid_argument(std::string(who) + ": requires p >= 1");
    }
}

} // namespace

EgfSeries pbell_egf(std::size_t p, std::size_t order, const VerifyContext& ctx)
{
    return EgfSeries(pbell_column(order, p, ctx.backend, *ctx.cache));
}

CheckReport verify_egf_definition(std::size_t p, std::size_t order, const VerifyContext& ctx)
{
    // 1F1(1; p+1; w) = sum_k w^k / ((p+1)_k) = sum_k C(k+p,p)^{-1} w^k / k!
    std::vector<Rational> outer(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        outer[k] = inv_binomial(k + p, p) / Rational(factorial(k));
    }
    const EgfSeries lhs = egf_compose_em1(outer, order);
    return make_report("egf-definition", series_params(p, order, ctx),
                       first_difference(lhs, pbell_egf(p, order, ctx)));
}

CheckReport verify_closed_forms(std::size_t p, std::size_t order, const VerifyContext& ctx)
{
    require_positive(p, "verify_closed_forms");
    const EgfSeries w = EgfSeries::exp_minus_one(order);
    const EgfSeries exp_w = egf_exp(w);
    const EgfSeries lhs = egf_pow(w, p) * pbell_egf(p, order, ctx);

    // p! exp(w) - sum_{k=1}^{p} p^{(k)} w^{p-k}
    EgfSeries rhs = exp_w * Rational(factorial(p));
    for (std::size_t k = 1; k <= p; ++k) {
        rhs -= egf_pow(w, p - k) * falling_factorial(Rational(p), k);
    }
    auto params = series_params(p, order, ctx);
    if (auto d = first_difference(lhs, rhs)) {
        d->note = "general closed form";
        return make_report("closed-forms", std::move(params), std::move(d));
    }

    std::optional<EgfSeries> displayed;
    const EgfSeries one = EgfSeries::constant(Rational(1), order);
    if (p == 1) {
        displayed = exp_w - one;
    } else if (p == 2) {
        displayed = (exp_w - EgfSeries::exponential(Rational(1), order)) * Rational(2);
    } else if (p == 3) {
        displayed = (exp_w * Rational(2) - EgfSeries::exponential(Rational(2), order) - one) * Rational(3);
    }
    if (displayed) {
        if (auto d = first_difference(lhs, *displayed)) {
            d->note = "displayed form for p=" + str(p);
            return make_report("closed-forms", std::move(params), std::move(d));
        }
    }
    return make_report("closed-forms", std::move(params), std::nullopt);
}

CheckReport verify_recurrence_re(std::size_t p, std::size_t order, const VerifyContext& ctx)
{
    require_positive(p, "verify_recurrence_re");
    const EgfSeries w = EgfSeries::exp_minus_one(order);
    const EgfSeries lhs = w * pbell_egf(p, order, ctx);
    const Rational rp(p);
    const EgfSeries rhs = pbell_egf(p - 1, order, ctx) * rp - EgfSeries::constant(rp, order);
    return make_report("recurrence-re", series_params(p, order, ctx), first_difference(lhs, rhs));
}

namespace
{

// (w - y) F with F given as y-power slices in the y^q/q! convention:
// (y F)_q = q F_{q-1}.
std::vector<EgfSeries> times_w_minus_y(const std::vector<EgfSeries>& f, const EgfSeries& w)
{
    std::vector<EgfSeries> out;
    out.reserve(f.size());
    for (std::size_t q = 0; q < f.size(); ++q) {
        EgfSeries s = w * f[q];
        if (q > 0) {
            s -= f[q - 1] * Rational(q);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<EgfSeries> pbell_bivariate(std::size_t order_z, std::size_t order_y, bool only_n_ge_p,
                                       const VerifyContext& ctx)
{
    std::vector<EgfSeries> f;
    for (std::size_t q = 0; q <= order_y; ++q) {
        EgfSeries s = pbell_egf(q, order_z, ctx);
        if (only_n_ge_p) {
            for (std::size_t n = 0; n < std::min(q, order_z + 1); ++n) {
                s[n] = Rational(0);
            }
        }
        f.push_back(std::move(s));
    }
    return f;
}

std::map<std::string, std::string> bivariate_params(std::size_t oz, std::size_t oy, const VerifyContext& ctx)
{
    return {{"order_z", str(oz)}, {"order_y", str(oy)}, {"backend", std::string(to_string(ctx.backend))}};
}

} // namespace

CheckReport verify_double_egf_pbell(std::size_t order_z, std::size_t order_y, const VerifyContext& ctx)
{
    const EgfSeries w = EgfSeries::exp_minus_one(order_z);
    const auto lhs = times_w_minus_y(pbell_bivariate(order_z, order_y, true, ctx), w);
    std::vector<EgfSeries> rhs(order_y + 1, EgfSeries(order_z));
    rhs[0] = w * egf_exp(w);
    auto d = first_difference(lhs, rhs);
    if (d) {
        d->note = "index is [y-power, z-index]";
    }
    return make_report("double-egf-pbell", bivariate_params(order_z, order_y, ctx), std::move(d));
}

CheckReport verify_double_egf_pbell_full(std::size_t order_z, std::size_t order_y, const VerifyContext& ctx)
{
    const EgfSeries w = EgfSeries::exp_minus_one(order_z);
    const auto lhs = times_w_minus_y(pbell_bivariate(order_z, order_y, false, ctx), w);
    // w e^w - y e^y; y e^y = sum_q q y^q / q!
    std::vector<EgfSeries> rhs;
    rhs.push_back(w * egf_exp(w));
    for (std::size_t q = 1; q <= order_y; ++q) {
        rhs.push_back(EgfSeries::constant(-Rational(q), order_z));
    }
    auto d = first_difference(lhs, rhs);
    if (d) {
        d->note = "index is [y-power, z-index]";
    }
    return make_report("double-egf-pbell-full", bivariate_params(order_z, order_y, ctx), std::move(d));
}

CheckReport verify_double_egf_polybell(std::size_t order_z, std::size_t order_y, const VerifyContext& ctx)
{
    const EgfSeries w = EgfSeries::exp_minus_one(order_z);
    const EgfSeries exp_w = egf_exp(w);
    std::vector<EgfSeries> lhs;
    std::vector<EgfSeries> rhs;
    EgfSeries w_pow = EgfSeries::constant(Rational(1), order_z);
    for (std::size_t q = 0; q <= order_y; ++q) {
        EgfSeries s(order_z);
        for (std::size_t n = 0; n <= order_z; ++n) {
            s[n] = polybell_neg(n, q, *ctx.cache);
        }
        lhs.push_back(std::move(s));
        // exp((y+1) w) = e^w sum_q w^q y^q / q!
        rhs.push_back(w_pow * exp_w);
        w_pow = w_pow * w;
    }
    auto d = first_difference(lhs, rhs);
    if (d) {
        d->note = "index is [y-power, z-index]";
    }
    return make_report("double-egf-polybell", {{"order_z", str(order_z)}, {"order_y", str(order_y)}},
                       std::move(d));
}

CheckReport verify_kummer_aa2(std::size_t p, std::size_t order, const VerifyContext& ctx)
{
    require_positive(p, "verify_kummer_aa2");
    if (order < p) {
        throw std::invalid_argument("verify_kummer_aa2: order " + str(order) + " too small for p = " + str(p)
                                    + "; each operator application consumes one order");
    }
    // g = (1 - exp(1 - e^z)) / (e^z - 1), built one order higher so the
    // valuation shift in the division still leaves order N.
    const EgfSeries w1 = EgfSeries::exp_minus_one(order + 1);
    const EgfSeries num = EgfSeries::constant(Rational(1), order + 1) - egf_exp(-w1);
    EgfSeries h = egf_div(num, w1);
    for (std::size_t i = 1; i < p; ++i) {
        const EgfSeries dh = egf_derivative(h);
        h = EgfSeries::exponential(Rational(-1), dh.order()) * dh;
    }
    const Rational sign = (p - 1) % 2 == 0 ? Rational(1) : Rational(-1);
    const EgfSeries w = EgfSeries::exp_minus_one(h.order());
    const EgfSeries rhs = egf_exp(w) * h * (sign * Rational(p));
    auto params = series_params(p, order, ctx);
    params["surviving_order"] = str(rhs.order());
    return make_report("kummer-aa2", std::move(params), first_difference(pbell_egf(p, order, ctx), rhs));
}

CheckReport verify_contiguous_c1(std::size_t p, std::size_t order, const VerifyContext& ctx)
{
    const EgfSeries w = EgfSeries::exp_minus_one(order);
    const EgfSeries one = EgfSeries::constant(Rational(1), order);
    const EgfSeries lhs = pbell_egf(p, order, ctx);
    const EgfSeries rhs = (one + w * (Rational(1) / Rational(p + 1))) * pbell_egf(p + 1, order, ctx)
                          - w * pbell_egf(p + 2, order, ctx) * (Rational(1) / Rational(p + 2));
    return make_report("contiguous-c1", series_params(p, order, ctx), first_difference(lhs, rhs));
}

CheckReport verify_incomplete_gamma_form(std::size_t p, const Rational& z0, std::size_t order,
                                         const VerifyContext& ctx)
{
    require_positive(p, "verify_incomplete_gamma_form");
    if (z0.is_zero()) {
        throw std::invalid_argument("verify_incomplete_gamma_form: sample point z0 must be nonzero");
    }
    auto params = series_params(p, order, ctx);
    params["z0"] = z0.to_string();

    // Exact part: w^p f_p = p e^w gamma(p, w), with
    // gamma(p, w) = (p-1)! (1 - e^{-w} sum_{j<p} w^j / j!).
    const EgfSeries w = EgfSeries::exp_minus_one(order);
    std::vector<Rational> partial_exp(p);
    for (std::size_t j = 0; j < p; ++j) {
        partial_exp[j] = Rational(BigInt(1), factorial(j));
    }
    const EgfSeries gamma = (EgfSeries::constant(Rational(1), order)
                             - egf_exp(-w) * egf_compose_em1(partial_exp, order))
                            * Rational(factorial(p - 1));
    const EgfSeries lhs = egf_pow(w, p) * pbell_egf(p, order, ctx);
    const EgfSeries rhs = egf_exp(w) * gamma * Rational(p);
    if (auto d = first_difference(lhs, rhs)) {
        d->note = "exact series";
        return make_report("incomplete-gamma", std::move(params), std::move(d));
    }

    // Floating-point spot check of the transcendental form.
    const double w0 = std::expm1(z0.to_double());
    const double dp = static_cast<double>(p);
    const double f_num = hyp1f1(1.0, dp + 1.0, w0);
    const double g_num = dp * std::exp(w0) * std::pow(w0, -dp) * lower_inc_gamma(dp, w0);
    const double err = std::abs(f_num - g_num);
    if (!(err <= 1e-10 * std::max(1.0, std::abs(f_num)))) {
        std::ostringstream l, r;
        l.precision(17);
        r.precision(17);
        l << f_num;
        r << g_num;
        return make_report("incomplete-gamma", std::move(params),
                           Difference{{0}, l.str(), r.str(), "numeric spot check at z0"});
    }
    return make_report("incomplete-gamma", std::move(params), std::nullopt);
}

namespace
{

std::map<std::string, std::string> grid_params(std::size_t nmax, std::size_t pmax, const VerifyContext& ctx)
{
    return {{"nmax", str(nmax)}, {"pmax", str(pmax)}, {"backend", std::string(to_string(ctx.backend))}};
}

// Columns B_{0..rows, p} for p in [0, cols].
std::vector<std::vector<Rational>> pbell_grid(std::size_t rows, std::size_t cols, const VerifyContext& ctx)
{
    std::vector<std::vector<Rational>> g;
    g.reserve(cols + 1);
    for (std::size_t p = 0; p <= cols; ++p) {
        g.push_back(pbell_column(rows, p, ctx.backend, *ctx.cache));
    }
    return g;
}

} // namespace

CheckReport verify_theorem_aaa(std::size_t nmax, std::size_t pmax, const VerifyContext& ctx)
{
    // B_{n+1,p+1} = B_{n+1,p} - (n+1)/(p+1) B_{n,p+1} + (n+1)/(p+2) B_{n,p+2}
    const auto g = pbell_grid(nmax + 1, pmax + 2, ctx);
    for (std::size_t n = 0; n < nmax; ++n) {
        for (std::size_t p = 0; p <= pmax; ++p) {
            const Rational lhs = g[p + 1][n + 1];
            const Rational rhs = g[p][n + 1] - Rational(n + 1) / Rational(p + 1) * g[p + 1][n]
                                 + Rational(n + 1) / Rational(p + 2) * g[p + 2][n];
            if (lhs != rhs) {
                return make_report("theorem-aaa", grid_params(nmax, pmax, ctx),
                                   cell_difference({n, p}, lhs, rhs, "index is [n, p]"));
            }
        }
    }
    return make_report("theorem-aaa", grid_params(nmax, pmax, ctx), std::nullopt);
}

CheckReport verify_stirling_transform_da2(std::size_t nmax, std::size_t pmax, const VerifyContext& ctx)
{
    // sum_k s(m,k) B_{n+k,p} = sum_k {n+m,k+m}_m C(m+k+p,p)^{-1}
    const auto g = pbell_grid(2 * nmax, pmax, ctx);
    for (std::size_t n = 0; n <= nmax; ++n) {
        for (std::size_t m = 0; m <= nmax; ++m) {
            for (std::size_t p = 0; p <= pmax; ++p) {
                Rational lhs;
                for (std::size_t k = 0; k <= m; ++k) {
                    lhs += stirling1(m, k, *ctx.cache) * g[p][n + k];
                }
                Rational rhs;
                for (std::size_t k = 0; k <= n; ++k) {
                    rhs += r_stirling2(n, k, m, *ctx.cache) * inv_binomial(m + k + p, p);
                }
                if (lhs != rhs) {
                    return make_report("stirling-transform-da2", grid_params(nmax, pmax, ctx),
                                       cell_difference({n, m, p}, lhs, rhs, "index is [n, m, p]"));
                }
            }
        }
    }
    return make_report("stirling-transform-da2", grid_params(nmax, pmax, ctx), std::nullopt);
}

CheckReport verify_poly_recurrence_cor2(std::size_t nmax, std::size_t pmax, const VerifyContext& ctx)
{
    // B_{n+1,p}(x) = x B_{n,p}(x) - sum_k C(n,k) (p/(p+1) B_{k,p+1}(x) - B_{k,p}(x))
    const Polynomial x = Polynomial::monomial(1);
    std::map<std::string, std::string> params{{"nmax", str(nmax)}, {"pmax", str(pmax)}};
    for (std::size_t n = 0; n < nmax; ++n) {
        for (std::size_t p = 0; p <= pmax; ++p) {
            const Polynomial lhs = pbell_poly(n + 1, p, *ctx.cache);
            Polynomial rhs = x * pbell_poly(n, p, *ctx.cache);
            const Rational ratio = Rational(p) / Rational(p + 1);
            for (std::size_t k = 0; k <= n; ++k) {
                const Polynomial inner = pbell_poly(k, p + 1, *ctx.cache) * ratio - pbell_poly(k, p, *ctx.cache);
                rhs -= inner * Rational(binomial(n, k));
            }
            if (lhs != rhs) {
                return make_report("poly-recurrence-cor2", std::move(params),
                                   Difference{{n, p}, lhs.to_string(), rhs.to_string(), "index is [n, p]"});
            }
        }
    }
    return make_report("poly-recurrence-cor2", std::move(params), std::nullopt);
}

CheckReport verify_ramanujan(std::size_t nmax, const VerifyContext& ctx)
{
    std::map<std::string, std::string> params{{"nmax", str(nmax)},
                                              {"backend", std::string(to_string(ctx.backend))}};
    for (std::size_t n = 0; n <= nmax; ++n) {
        const Rational lhs = B(n, 1, ctx);
        const Rational rhs = pbell_ramanujan_p1(n, *ctx.cache);
        if (lhs != rhs) {
            return make_report("ramanujan", std::move(params), cell_difference({n}, lhs, rhs));
        }
    }
    return make_report("ramanujan", std::move(params), std::nullopt);
}

CheckReport verify_iterated_integral(std::size_t nmax, std::size_t pmax, const VerifyContext& ctx)
{
    for (std::size_t n = 0; n <= nmax; ++n) {
        for (std::size_t p = 0; p <= pmax; ++p) {
            const Rational lhs = B(n, p, ctx);
            const Rational rhs = pbell_iterated_integral(n, p, *ctx.cache);
            if (lhs != rhs) {
                return make_report("iterated-integral", grid_params(nmax, pmax, ctx),
                                   cell_difference({n, p}, lhs, rhs, "index is [n, p]"));
            }
        }
    }
    return make_report("iterated-integral", grid_params(nmax, pmax, ctx), std::nullopt);
}

CheckReport verify_row_identity(std::size_t nmax, const VerifyContext& ctx)
{
    // sum_p B_n^{(-p)} / p! = phi_n(2)
    for (std::size_t n = 0; n <= nmax; ++n) {
        Rational lhs;
        for (std::size_t p = 0; p <= n; ++p) {
            lhs += polybell_neg(n, p, *ctx.cache) / Rational(factorial(p));
        }
        const Rational rhs = poly_eval(bell_poly(n, *ctx.cache), Rational(2));
        if (lhs != rhs) {
            return make_report("row-identity", {{"nmax", str(nmax)}}, cell_difference({n}, lhs, rhs));
        }
    }
    return make_report("row-identity", {{"nmax", str(nmax)}}, std::nullopt);
}

CheckReport verify_bell_recurrence(std::size_t nmax, const VerifyContext& ctx)
{
    // phi_{n+1} = (n+1) phi_n + sum_{k=1}^{n-1} (-1)^{n-k} C(n,k-1) phi_k
    for (std::size_t n = 0; n < nmax; ++n) {
        const Rational lhs = bell_number(n + 1, *ctx.cache);
        Rational rhs = Rational(n + 1) * bell_number(n, *ctx.cache);
        for (std::size_t k = 1; k + 1 <= n; ++k) {
            const Rational term = Rational(binomial(n, k - 1)) * bell_number(k, *ctx.cache);
            rhs += (n - k) % 2 == 0 ? term : -term;
        }
        if (lhs != rhs) {
            return make_report("bell-recurrence", {{"nmax", str(nmax)}}, cell_difference({n}, lhs, rhs));
        }
    }
    return make_report("bell-recurrence", {{"nmax", str(nmax)}}, std::nullopt);
}

CheckReport verify_polybell_derivative(std::size_t nmax, const VerifyContext& ctx)
{
    for (std::size_t n = 0; n <= nmax; ++n) {
        for (std::size_t p = 0; p <= n; ++p) {
            const Rational lhs = polybell_neg(n, p, *ctx.cache);
            const Rational rhs = polybell_neg_derivative(n, p, *ctx.cache);
            if (lhs != rhs) {
                return make_report("polybell-derivative", {{"nmax", str(nmax)}},
                                   cell_difference({n, p}, lhs, rhs, "index is [n, p]"));
            }
        }
    }
    return make_report("polybell-derivative", {{"nmax", str(nmax)}}, std::nullopt);
}

CheckReport verify_backend_agreement(std::size_t nmax, std::size_t pmax, const VerifyContext& ctx)
{
    std::map<std::string, std::string> params{{"nmax", str(nmax)}, {"pmax", str(pmax)}};
    for (std::size_t n = 0; n <= nmax; ++n) {
        for (std::size_t p = 0; p <= pmax; ++p) {
            try {
                pbell_number(n, p, PBellBackend::ExplicitStirling, true, *ctx.cache);
            } catch (const BackendMismatch& e) {
                return make_report("backend-agreement", std::move(params),
                                   cell_difference({n, p}, e.first_value, e.second_value,
                                                   std::string(to_string(e.first)) + " vs "
                                                       + std::string(to_string(e.second))));
            }
        }
    }
    return make_report("backend-agreement", std::move(params), std::nullopt);
}

const std::vector<std::string>& identity_ids()
{
    static const std::vector<std::string> ids{
        "egf-definition",
        "closed-forms",
        "recurrence-re",
        "contiguous-c1",
        "kummer-aa2",
        "incomplete-gamma",
        "double-egf-pbell",
        "double-egf-pbell-full",
        "double-egf-polybell",
        "theorem-aaa",
        "stirling-transform-da2",
        "poly-recurrence-cor2",
        "ramanujan",
        "iterated-integral",
        "row-identity",
        "bell-recurrence",
        "polybell-derivative",
        "backend-agreement",
    };
    return ids;
}

bool is_identity_id(std::string_view id)
{
    const auto& ids = identity_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<CheckReport> run_all(const RunOptions& opts, const VerifyContext& ctx)
{
    for (const auto& id : opts.only) {
        if (!is_identity_id(id)) {
            throw std::invalid_argument("run_all: unknown identity id '" + id + "'");
        }
    }
    const auto wanted = [&](const char* id) { return opts.only.empty() || opts.only.contains(id); };
    const std::size_t N = opts.order;
    std::vector<CheckReport> out;

    if (wanted("egf-definition")) {
        for (std::size_t p = 0; p <= opts.pmax; ++p) {
            out.push_back(verify_egf_definition(p, N, ctx));
        }
    }
    if (wanted("closed-forms")) {
        for (std::size_t p = 1; p <= opts.pmax; ++p) {
            out.push_back(verify_closed_forms(p, N, ctx));
        }
    }
    if (wanted("recurrence-re")) {
        for (std::size_t p = 1; p <= opts.pmax; ++p) {
            out.push_back(verify_recurrence_re(p, N, ctx));
        }
    }
    if (wanted("contiguous-c1")) {
        for (std::size_t p = 0; p <= opts.pmax; ++p) {
            out.push_back(verify_contiguous_c1(p, N, ctx));
        }
    }
    if (wanted("kummer-aa2")) {
        for (std::size_t p = 1; p <= std::min(opts.pmax, N); ++p) {
            out.push_back(verify_kummer_aa2(p, N, ctx));
        }
    }
    if (wanted("incomplete-gamma")) {
        for (std::size_t p = 1; p <= opts.pmax; ++p) {
            out.push_back(verify_incomplete_gamma_form(p, Rational(1) / Rational(2), N, ctx));
        }
    }
    if (wanted("double-egf-pbell")) {
        out.push_back(verify_double_egf_pbell(N, opts.pmax, ctx));
    }
    if (wanted("double-egf-pbell-full")) {
        out.push_back(verify_double_egf_pbell_full(N, opts.pmax, ctx));
    }
    if (wanted("double-egf-polybell")) {
        out.push_back(verify_double_egf_polybell(N, N, ctx));
    }
    if (wanted("theorem-aaa")) {
        out.push_back(verify_theorem_aaa(opts.nmax, opts.pmax, ctx));
    }
    if (wanted("stirling-transform-da2")) {
        out.push_back(verify_stirling_transform_da2(opts.nmax, opts.pmax, ctx));
    }
    if (wanted("poly-recurrence-cor2")) {
        out.push_back(verify_poly_recurrence_cor2(opts.nmax, opts.pmax, ctx));
    }
    if (wanted("ramanujan")) {
        out.push_back(verify_ramanujan(opts.nmax, ctx));
    }
    if (wanted("iterated-integral")) {
        out.push_back(verify_iterated_integral(opts.nmax, opts.pmax, ctx));
    }
    if (wanted("row-identity")) {
        out.push_back(verify_row_identity(opts.nmax, ctx));
    }
    if (wanted("bell-recurrence")) {
        out.push_back(verify_bell_recurrence(opts.nmax, ctx));
    }
    if (wanted("polybell-derivative")) {
        out.push_back(verify_polybell_derivative(opts.nmax, ctx));
    }
    if (wanted("backend-agreement")) {
        out.push_back(verify_backend_agreement(opts.nmax, opts.pmax, ctx));
    }
    return out;
}

} // namespace polybell
