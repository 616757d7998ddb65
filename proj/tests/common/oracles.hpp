// Independent reference computations shared by the unit and acceptance tests.
// Nothing here calls into the library's number routines.
#ifndef POLYBELL_TESTS_ORACLES_HPP
#define POLYBELL_TESTS_ORACLES_HPP

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "polybell/polynomial.hpp"
#include "polybell/rational.hpp"

namespace oracle
{

using polybell::Polynomial;
using polybell::Rational;

/// Set partitions of an n-set counted by number of blocks, by enumeration of
/// restricted growth strings.
inline std::vector<long> partitions_by_blocks(std::size_t n)
{
    std::vector<long> counts(n + 1, 0);
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
        if (i == n) {
            ++counts[used];
            return;
        }
        for (std::size_t b = 0; b <= used; ++b) {
            go(i + 1, b == used ? used + 1 : used);
        }
    };
    go(0, 0);
    return counts;
}

/// B_{n,p} as a sum over set partitions, each with k blocks weighted by
/// k! p! / (k+p)!.
inline Rational pbell_by_partitions(std::size_t n, std::size_t p)
{
    const auto counts = partitions_by_blocks(n);
    Rational total;
    for (std::size_t k = 0; k <= n; ++k) {
        Rational w(1);
        for (std::size_t j = 1; j <= k; ++j) {
            w *= Rational(static_cast<long>(j), static_cast<long>(j + p));
        }
        total += Rational(counts[k]) * w;
    }
    return total;
}

/// The first few p-Bell polynomials written out as rational functions of p.
inline Polynomial displayed_pbell_poly(std::size_t n, long p)
{
    const Rational P(p);
    const Rational d1 = P + Rational(1);
    const Rational d2 = d1 * (P + Rational(2));
    const Rational d3 = d2 * (P + Rational(3));
    const Rational d4 = d3 * (P + Rational(4));
    const Rational q2 = P * P + Rational(11) * P + Rational(30);
    const Rational q3 = P * P * P + Rational(23) * P * P + Rational(160) * P + Rational(360);
    switch (n) {
    case 0:
        return Polynomial({Rational(1)});
    case 1:
        return Polynomial({Rational(1) / d1, Rational(1)});
    case 2:
        return Polynomial({(P + Rational(4)) / d2, Rational(2) / d1, Rational(1)});
    case 3:
        return Polynomial({q2 / d3, Rational(3) * (P + Rational(4)) / d2, Rational(3) / d1, Rational(1)});
    case 4:
        return Polynomial({q3 / d4, Rational(4) * q2 / d3, Rational(6) * (P + Rational(4)) / d2,
                           Rational(4) / d1, Rational(1)});
    default:
        return Polynomial::constant(Rational(0));
    }
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace oracle

#endif
