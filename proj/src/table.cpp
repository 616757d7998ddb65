#include "polybell/table.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "polybell/parallel.hpp"
#include "polybell/polybell.hpp"

namespace polybell
{

std::string_view to_string(TableKind k)
{
    switch (k) {
    case TableKind::PBellNumbers:
        return "pbell-numbers";
    case TableKind::PolyBellNeg:
        return "polybell-neg";
    case TableKind::PBellPolyCoeffs:
        return "pbell-poly-coeffs";
    }
    return "?";
}

std::optional<TableKind> parse_table_kind(std::string_view s)
{
    for (auto k : {TableKind::PBellNumbers, TableKind::PolyBellNeg, TableKind::PBellPolyCoeffs}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    return std::nullopt;
}

std::string_view to_string(TableFormat f)
{
    return f == TableFormat::Csv ? "csv" : "json";
}

std::optional<TableFormat> parse_table_format(std::string_view s)
{
    if (s == "csv") {
        return TableFormat::Csv;
    }
    if (s == "json") {
        return TableFormat::Json;
    }
    return std::nullopt;
}

Table build_table(const TableRequest& req, TriangleCache& cache)
{
    const std::size_t cols = req.p_max + 1;
    // columns[p][n] holds the cell strings; for coefficient tables each cell
    // expands into n+1 entries.
    std::vector<std::vector<std::vector<std::string>>> columns(cols);

    parallel_for(cols, [&](std::size_t p) {
        auto& col = columns[p];
        col.resize(req.n_max + 1);
        switch (req.kind) {
        case TableKind::PBellNumbers: {
            std::vector<Rational> values = pbell_column(req.n_max, p, req.backend, cache);
            if (req.cross_check) {
                for (std::size_t n = 0; n <= req.n_max; ++n) {
                    pbell_number(n, p, req.backend, true, cache);
                }
            }
            for (std::size_t n = 0; n <= req.n_max; ++n) {
                col[n].push_back(values[n].to_string());
            }
            break;
        }
        case TableKind::PolyBellNeg:
            for (std::size_t n = 0; n <= req.n_max; ++n) {
                col[n].push_back(polybell_neg(n, p, cache).to_string());
            }
            break;
        case TableKind::PBellPolyCoeffs: {
            const std::vector<Rational> values = pbell_column(req.n_max, p, req.backend, cache);
            for (std::size_t n = 0; n <= req.n_max; ++n) {
                // B_{n,p}(x) = sum_k C(n,k) B_{n-k,p} x^k
                for (std::size_t k = 0; k <= n; ++k) {
                    col[n].push_back((Rational(binomial(n, k)) * values[n - k]).to_string());
                }
            }
            break;
        }
        }
    });

    Table t{req.kind, req.n_max, req.p_max, {}};
    for (std::size_t n = 0; n <= req.n_max; ++n) {
        for (std::size_t p = 0; p < cols; ++p) {
            const long label = req.kind == TableKind::PolyBellNeg ? -static_cast<long>(p) : static_cast<long>(p);
            const auto& cell = columns[p][n];
            if (req.kind == TableKind::PBellPolyCoeffs) {
                for (std::size_t k = 0; k < cell.size(); ++k) {
                    t.entries.push_back({n, label, k, cell[k]});
                }
            } else {
                t.entries.push_back({n, label, std::nullopt, cell.front()});
            }
        }
    }
    return t;
}

std::string write_csv(const Table& t)
{
    std::ostringstream os;
    if (t.kind == TableKind::PBellPolyCoeffs) {
        os << "n,p,k,coeff\n";
        for (const auto& e : t.entries) {
            os << e.n << ',' << e.p << ',' << *e.k << ',' << e.value << '\n';
        }
        return os.str();
    }
    os << "n\\p";
    const long sign = t.kind == TableKind::PolyBellNeg ? -1 : 1;
    for (std::size_t p = 0; p <= t.p_max; ++p) {
        os << ',' << sign * static_cast<long>(p);
    }
    os << '\n';
    const std::size_t cols = t.p_max + 1;
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (i % cols == 0) {
            os << t.entries[i].n;
        }
        os << ',' << t.entries[i].value;
        if (i % cols == cols - 1) {
            os << '\n';
        }
    }
    return os.str();
}

std::string write_json(const Table& t)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : t.entries) {
        nlohmann::ordered_json o;
        o["n"] = e.n;
        o["p"] = e.p;
        if (e.k) {
            o["k"] = *e.k;
        }
        o["value"] = e.value;
        arr.push_back(std::move(o));
    }
    return arr.dump(1) + "\n";
}

std::string write_table(const Table& t, TableFormat f)
{
    return f == TableFormat::Csv ? write_csv(t) : write_json(t);
}

namespace
{

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

template <class T>
T to_int(std::string_view s)
{
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("table: bad integer '" + std::string(s) + "'");
    }
    return v;
}

std::string checked_value(std::string_view s)
{
    return Rational::parse(s).to_string();
}

void finish(Table& t)
{
    if (t.entries.empty()) {
        throw std::invalid_argument("table: no rows");
    }
    t.n_max = t.entries.back().n;
    long extreme = 0;
    for (const auto& e : t.entries) {
        extreme = std::max(extreme, std::abs(e.p));
    }
    t.p_max = static_cast<std::size_t>(extreme);
}

} // namespace

Table parse_csv(std::string_view text)
{
    std::vector<std::string_view> lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        throw std::invalid_argument("table: empty input");
    }
    Table t;
    if (lines[0] == "n,p,k,coeff") {
        t.kind = TableKind::PBellPolyCoeffs;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto f = split(lines[i], ',');
            if (f.size() != 4) {
                throw std::invalid_argument("table: expected 4 fields on line " + std::to_string(i + 1));
            }
            t.entries.push_back({to_int<std::size_t>(f[0]), to_int<long>(f[1]), to_int<std::size_t>(f[2]),
                                 checked_value(f[3])});
        }
        finish(t);
        return t;
    }

    const auto header = split(lines[0], ',');
    if (header.size() < 2 || header[0] != "n\\p") {
        throw std::invalid_argument("table: unrecognised header");
    }
    std::vector<long> labels;
    for (std::size_t j = 1; j < header.size(); ++j) {
        labels.push_back(to_int<long>(header[j]));
    }
    const bool negative = std::any_of(labels.begin(), labels.end(), [](long p) { return p < 0; });
    t.kind = negative ? TableKind::PolyBellNeg : TableKind::PBellNumbers;
    for (std::size_t j = 0; j < labels.size(); ++j) {
        if (labels[j] != (negative ? -1 : 1) * static_cast<long>(j)) {
            throw std::invalid_argument("table: column labels must be consecutive from 0");
        }
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',');
        if (f.size() != header.size()) {
            throw std::invalid_argument("table: wrong field count on line " + std::to_string(i + 1));
        }
        const auto n = to_int<std::size_t>(f[0]);
        if (n != i - 1) {
            throw std::invalid_argument("table: rows must be n = 0, 1, ...");
        }
        for (std::size_t j = 1; j < f.size(); ++j) {
            t.entries.push_back({n, labels[j - 1], std::nullopt, checked_value(f[j])});
        }
    }
    finish(t);
    return t;
}

Table parse_json(std::string_view text)
{
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("table: ") + e.what());
    }
    if (!arr.is_array()) {
        throw std::invalid_argument("table: expected a JSON array");
    }
    Table t;
    bool any_k = false;
    bool any_negative = false;
    try {
        for (const auto& o : arr) {
            TableEntry e{o.at("n").get<std::size_t>(), o.at("p").get<long>(), std::nullopt,
                         checked_value(o.at("value").get<std::string>())};
            if (o.contains("k")) {
                e.k = o.at("k").get<std::size_t>();
                any_k = true;
            }
            any_negative = any_negative || e.p < 0;
            t.entries.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("table: ") + e.what());
    }
    t.kind = any_k ? TableKind::PBellPolyCoeffs
                   : (any_negative ? TableKind::PolyBellNeg : TableKind::PBellNumbers);
    finish(t);
    return t;
}

std::size_t peak_bit_length(const Table& t)
{
    std::size_t peak = 0;
    for (const auto& e : t.entries) {
        peak = std::max(peak, Rational::parse(e.value).bit_length());
    }
    return peak;
}

} // namespace polybell
