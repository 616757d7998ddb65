#ifndef POLYBELL_IDENTITY_VERIFIER_HPP
#define POLYBELL_IDENTITY_VERIFIER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "polybell/egf_series.hpp"
#include "polybell/pbell.hpp"
#include "polybell/rational.hpp"
#include "polybell/triangle_cache.hpp"

namespace polybell
{

/// Location and values of the first mismatch found by a verifier.
///
/// index holds the coefficient index for univariate series, (y-power,
/// z-index) for bivariate series, and the grid cell for pointwise suites.
/// Indices are scanned in lexicographic order, so this is always the smallest
/// differing position.
struct Difference {
    std::vector<std::size_t> index;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct CheckReport {
    std::string identity_id;
    std::map<std::string, std::string> params;
    std::optional<Difference> detail; ///< empty iff the check passed

    [[nodiscard]] bool passed() const { return !detail.has_value(); }
    [[nodiscard]] nlohmann::json to_json() const;
    /// "PASS id k=v ..." or "FAIL id k=v ... at [i,j]: lhs != rhs"
    [[nodiscard]] std::string to_line() const;
};

struct VerifyContext {
    /// Backend that supplies B_{n,p} to the series-level checks.
    PBellBackend backend = PBellBackend::ExplicitStirling;
    TriangleCache* cache = &default_cache();
};

/// First differing coefficient of two series over their common order.
std::optional<Difference> first_difference(const EgfSeries& lhs, const EgfSeries& rhs);
/// Same over two bivariate series stored as y-power slices of EgfSeries.
std::optional<Difference> first_difference(const std::vector<EgfSeries>& lhs, const std::vector<EgfSeries>& rhs);

/// f_p(z) = sum_n B_{n,p} z^n/n! to order N from the context backend.
EgfSeries pbell_egf(std::size_t p, std::size_t order, const VerifyContext& ctx = {});

// Generating-function identities (truncated at order N).
CheckReport verify_egf_definition(std::size_t p, std::size_t order, const VerifyContext& ctx = {});
CheckReport verify_closed_forms(std::size_t p, std::size_t order, const VerifyContext& ctx = {});
CheckReport verify_recurrence_re(std::size_t p, std::size_t order, const VerifyContext& ctx = {});
/// (e^z - 1 - y) sum_{p} sum_{n >= p} B_{n,p} z^n/n! y^p/p! = (e^z - 1) exp(e^z - 1).
CheckReport verify_double_egf_pbell(std::size_t order_z, std::size_t order_y, const VerifyContext& ctx = {});
/// (e^z - 1 - y) sum_{p} sum_{n >= 0} B_{n,p} z^n/n! y^p/p! = (e^z - 1) exp(e^z - 1) - y e^y.
CheckReport verify_double_egf_pbell_full(std::size_t order_z, std::size_t order_y, const VerifyContext& ctx = {});
CheckReport verify_double_egf_polybell(std::size_t order_z, std::size_t order_y, const VerifyContext& ctx = {});
/// Throws std::invalid_argument when order < p (no coefficient would survive).
CheckReport verify_kummer_aa2(std::size_t p, std::size_t order, const VerifyContext& ctx = {});
CheckReport verify_contiguous_c1(std::size_t p, std::size_t order, const VerifyContext& ctx = {});
/// Exact check with gamma(p, w) in closed form, plus a floating-point spot
/// check of 1F1(1; p+1; w) against p e^w w^{-p} gamma(p, w) at w = e^{z0} - 1.
CheckReport verify_incomplete_gamma_form(std::size_t p, const Rational& z0, std::size_t order,
                                         const VerifyContext& ctx = {});

// Pointwise suites over 0 <= n <= nmax, 0 <= p <= pmax.
CheckReport verify_theorem_aaa(std::size_t nmax, std::size_t pmax, const VerifyContext& ctx = {});
CheckReport verify_stirling_transform_da2(std::size_t nmax, std::size_t pmax, const VerifyContext& ctx = {});
CheckReport verify_poly_recurrence_cor2(std::size_t nmax, std::size_t pmax, const VerifyContext& ctx = {});
CheckReport verify_ramanujan(std::size_t nmax, const VerifyContext& ctx = {});
CheckReport verify_iterated_integral(std::size_t nmax, std::size_t pmax, const VerifyContext& ctx = {});
CheckReport verify_row_identity(std::size_t nmax, const VerifyContext& ctx = {});
CheckReport verify_bell_recurrence(std::size_t nmax, const VerifyContext& ctx = {});
CheckReport verify_polybell_derivative(std::size_t nmax, const VerifyContext& ctx = {});
CheckReport verify_backend_agreement(std::size_t nmax, std::size_t pmax, const VerifyContext& ctx = {});

struct RunOptions {
    std::size_t nmax = 12;
    std::size_t pmax = 5;
    std::size_t order = 12;
    /// Identity ids to run; empty runs everything.
    std::set<std::string> only;
};

/// Every identity id understood by run_all, in execution order.
const std::vector<std::string>& identity_ids();
bool is_identity_id(std::string_view id);

std::vector<CheckReport> run_all(const RunOptions& opts, const VerifyContext& ctx = {});

} // namespace polybell

#endif
