#include "polybell/pbell.hpp"

#include <sstream>
#include <utility>

#include "polybell/special_numbers.hpp"

namespace polybell
{

std::string_view to_string(PBellBackend b)
{
    switch (b) {
    case PBellBackend::ExplicitStirling:
        return "explicit";
    case PBellBackend::RecurrenceR3:
        return "r3";
    case PBellBackend::ZTriangle:
        return "ztriangle";
    case PBellBackend::GenBernoulli:
        return "genbernoulli";
    }
    return "unknown";
}

std::optional<PBellBackend> parse_backend(std::string_view name)
{
    for (auto b : all_backends) {
        if (to_string(b) == name) {
            return b;
        }
    }
    return std::nullopt;
}

namespace
{

std::string mismatch_message(std::size_t n, std::size_t p, PBellBackend a, const Rational& va, PBellBackend b,
                             const Rational& vb)
{
    std::ostringstream os;
    os << "backend mismatch at (n=" << n << ", p=" << p << "): " << to_string(a) << " = " << va << ", "
       << to_string(b) << " = " << vb;
    return os.str();
}

Rational inv_binomial(std::size_t n, std::size_t k)
{
    return Rational(BigInt(1), binomial(n, k));
}

} // namespace

BackendMismatch::BackendMismatch(std::size_t n_, std::size_t p_, PBellBackend a, Rational va, PBellBackend b,
                                 Rational vb)
    : std::runtime_error(mismatch_message(n_, p_, a, va, b, vb)), n(n_), p(p_), first(a),
      first_value(std::move(va)), second(b), second_value(std::move(vb))
{
}

Rational pbell_explicit(std::size_t n, std::size_t p, TriangleCache& cache)
{
    Rational s;
    for (std::size_t k = 0; k <= n; ++k) {
        s += stirling2(n, k, cache) * inv_binomial(k + p, k);
    }
    return s;
}

Rational pbell_r3(std::size_t n, std::size_t p, TriangleCache& cache)
{
    const auto cell = [](std::size_t row, std::size_t col) {
        return CacheKey{Family::PBellR3, static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col)};
    };
    if (auto hit = cache.find(cell(n, p))) {
        return *hit;
    }
    // Row r of column q needs row r-1 of column q+1, so reaching (n, p) takes
    // columns p..p+n with column p+j filled up to row n-j.
    std::vector<std::vector<Rational>> b(n + 1); // b[j][r] = B_{r, p+j}
    for (std::size_t j = 0; j <= n; ++j) {
        b[j].assign(n - j + 1, Rational(1));
    }
    for (std::size_t r = 1; r <= n; ++r) {
        const std::size_t m = r - 1; // B_{m+1} from row m
        for (std::size_t j = 0; j + r <= n; ++j) {
            const std::size_t q = p + j;
            Rational v = Rational(m + 1) * b[j][m];
            for (std::size_t k = 0; k + 2 <= m; ++k) {
                Rational term = Rational(binomial(m, k)) * b[j][k + 1];
                if ((m - k) % 2 == 0) {
                    v -= term;
                } else {
                    v += term;
                }
            }
            v -= Rational(q) / Rational(q + 1) * b[j + 1][m];
            b[j][r] = std::move(v);
        }
    }
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t r = 0; r < b[j].size(); ++r) {
            cache.insert(cell(r, p + j), b[j][r]);
        }
    }
    return b[0][n];
}

Rational pbell_z_triangle(std::size_t n, std::size_t p)
{
    std::vector<Rational> z(n + 1, Rational(1));
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t width = n - step; // entries still needed after this step
        for (std::size_t m = 0; m < width; ++m) {
            z[m] = Rational(m + 1) / Rational(m + p + 1) * z[m + 1] + Rational(m) * z[m];
        }
    }
    return z[0];
}

Rational pbell_gen_bernoulli(std::size_t n, std::size_t p, TriangleCache& cache)
{
    const std::size_t np = n + p;
    const Rational scale = inv_binomial(np, p);
    Rational first;
    for (std::size_t k = 0; k <= np; ++k) {
        const Rational bk = gen_bernoulli(k, p, cache);
        if (bk.is_zero()) {
            continue;
        }
        first += Rational(binomial(np, k)) * bell_number(np - k, cache) * bk;
    }
    first *= scale;
    Rational second;
    for (std::size_t k = 1; k <= p; ++k) {
        second += inv_binomial(n + k, k) * Rational(binomial(p, k)) * gen_bernoulli(n + k, k, cache);
    }
    return first - second;
}

Rational pbell_number(std::size_t n, std::size_t p, PBellBackend backend, bool cross_check, TriangleCache& cache)
{
    const auto run = [&](PBellBackend b) {
        switch (b) {
        case PBellBackend::ExplicitStirling:
            return pbell_explicit(n, p, cache);
        case PBellBackend::RecurrenceR3:
            return pbell_r3(n, p, cache);
        case PBellBackend::ZTriangle:
            return pbell_z_triangle(n, p);
        case PBellBackend::GenBernoulli:
            return pbell_gen_bernoulli(n, p, cache);
        }
        throw std::invalid_argument("pbell_number: unknown backend");
    };
    Rational value = run(backend);
    if (cross_check) {
        for (auto other : all_backends) {
            if (other == backend) {
                continue;
            }
            Rational v = run(other);
            if (v != value) {
                throw BackendMismatch(n, p, backend, value, other, std::move(v));
            }
        }
    }
    return value;
}

std::vector<Rational> pbell_column(std::size_t n_max, std::size_t p, PBellBackend backend, TriangleCache& cache)
{
    std::vector<Rational> col;
    col.reserve(n_max + 1);
    if (backend == PBellBackend::ZTriangle) {
        std::vector<Rational> z(n_max + 1, Rational(1));
        col.push_back(z[0]);
        for (std::size_t step = 0; step < n_max; ++step) {
            for (std::size_t m = 0; m < n_max - step; ++m) {
                z[m] = Rational(m + 1) / Rational(m + p + 1) * z[m + 1] + Rational(m) * z[m];
            }
            col.push_back(z[0]);
        }
        return col;
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
        col.push_back(pbell_number(n, p, backend, false, cache));
    }
    return col;
}

Rational pbell_ramanujan_p1(std::size_t n, TriangleCache& cache)
{
    Rational s;
    for (std::size_t k = 0; k <= n; ++k) {
        s += Rational(binomial(n, k)) * bell_number(k + 1, cache) * bernoulli(n - k, cache) / Rational(k + 1);
    }
    return s;
}

Polynomial pbell_poly(std::size_t n, std::size_t p, TriangleCache& cache)
{
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        c[n - k] = Rational(binomial(n, k)) * pbell_number(k, p, PBellBackend::ExplicitStirling, false, cache);
    }
    return Polynomial(std::move(c));
}

Rational pbell_poly_weighted(std::size_t n, std::size_t p, const Rational& x, TriangleCache& cache)
{
    Rational s;
    for (std::size_t k = 0; k <= n; ++k) {
        s += inv_binomial(k + p, k) * poly_eval(weighted_stirling_poly(n, k, cache), x);
    }
    return s;
}

Rational zpoly_triangle(std::size_t n, std::size_t p, const Rational& x)
{
    std::vector<Rational> z(n + 1, Rational(1));
    for (std::size_t step = 0; step < n; ++step) {
        for (std::size_t m = 0; m < n - step; ++m) {
            z[m] = Rational(m + 1) / Rational(m + p + 1) * z[m + 1] + (Rational(m) + x) * z[m];
        }
    }
    return z[0];
}

ZTable::ZTable(std::size_t p, std::size_t n_max) : p_(p), n_max_(n_max)
{
    rows_.reserve(n_max + 1);
    rows_.emplace_back(n_max + 1, Rational(1));
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto& prev = rows_.back();
        std::vector<Rational> row(n_max - n + 1);
        for (std::size_t m = 0; m < row.size(); ++m) {
            row[m] = Rational(m + 1) / Rational(m + p + 1) * prev[m + 1] + Rational(m) * prev[m];
        }
        rows_.push_back(std::move(row));
    }
}

const Rational& ZTable::at(std::size_t n, std::size_t m) const
{
    if (n + m > n_max_) {
        throw std::out_of_range("ZTable::at: n + m exceeds n_max");
    }
    return rows_[n][m];
}

} // namespace polybell
