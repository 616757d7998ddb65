#ifndef POLYBELL_TABLE_HPP
#define POLYBELL_TABLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polybell/pbell.hpp"
#include "polybell/triangle_cache.hpp"

namespace polybell
{

enum class TableKind {
    PBellNumbers,    ///< B_{n,p}, columns p = 0..p_max
    PolyBellNeg,     ///< B_n^{(-p)}, columns labelled 0, -1, ..., -p_max
    PBellPolyCoeffs, ///< coefficients of x^k in B_{n,p}(x), long format
};

enum class TableFormat { Csv, Json };

std::string_view to_string(TableKind k);
std::optional<TableKind> parse_table_kind(std::string_view s);
std::string_view to_string(TableFormat f);
std::optional<TableFormat> parse_table_format(std::string_view s);

struct TableRequest {
    std::size_t n_max = 6;
    std::size_t p_max = 3;
    TableKind kind = TableKind::PBellNumbers;
    PBellBackend backend = PBellBackend::ZTriangle; ///< ignored for PolyBellNeg
    TableFormat format = TableFormat::Csv;
    bool cross_check = false;
};

struct TableEntry {
    std::size_t n;
    long p;
    std::optional<std::size_t> k; ///< only for PBellPolyCoeffs
    std::string value;            ///< exact "num/den"

    bool operator==(const TableEntry&) const = default;
};

/// Entries in emission order: n-major, then p (then k).
struct Table {
    TableKind kind = TableKind::PBellNumbers;
    std::size_t n_max = 0;
    std::size_t p_max = 0;
    std::vector<TableEntry> entries;

    bool operator==(const Table&) const = default;
};

/// Columns are computed in parallel; the result does not depend on the
/// thread count. Throws BackendMismatch under cross_check.
Table build_table(const TableRequest& req, TriangleCache& cache = default_cache());

std::string write_csv(const Table& t);
std::string write_json(const Table& t);
std::string write_table(const Table& t, TableFormat f);

/// Throws std::invalid_argument on malformed input.
Table parse_csv(std::string_view text);
Table parse_json(std::string_view text);

/// Largest numerator or denominator bit length in the table.
std::size_t peak_bit_length(const Table& t);

} // namespace polybell

#endif
