#ifndef POLYBELL_TRIANGLE_CACHE_HPP
#define POLYBELL_TRIANGLE_CACHE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "polybell/rational.hpp"

namespace polybell
{

enum class Family : std::uint8_t {
    Stirling1,
    Stirling2,
    RStirling2,
    GenBernoulli,
    PBellR3,
};

struct CacheKey {
    Family family;
    std::uint32_t row;
    std::uint32_t col;
    std::uint32_t param = 0;

    friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

struct CacheKeyHash {
    std::size_t operator()(const CacheKey& k) const noexcept
    {
        std::uint64_t h = static_cast<std::uint64_t>(k.family);
        h = h * 0x9E3779B97F4A7C15ULL ^ k.row;
        h = h * 0x9E3779B97F4A7C15ULL ^ k.col;
        h = h * 0x9E3779B97F4A7C15ULL ^ k.param;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

/// Shared memo table for the combinatorial triangles.
///
/// Entries are write-once: a second insert for an existing key keeps the first
/// value. Lookups take a shared lock, inserts an exclusive one, so concurrent
/// readers never block each other. Two threads racing to fill the same cell
/// compute identical values and the loser's insert is a no-op.
class TriangleCache
{
public:
    TriangleCache() = default;
    TriangleCache(const TriangleCache&) = delete;
    TriangleCache& operator=(const TriangleCache&) = delete;

    [[nodiscard]] std::optional<Rational> find(const CacheKey& key) const;
    /// Returns the value stored under key after the call.
    Rational insert(const CacheKey& key, Rational value);

    /// Returns the cached value, computing and inserting it if absent.
    /// compute() runs without holding the lock, so it may recurse into the cache.
    template <class F>
    Rational get_or_compute(const CacheKey& key, F&& compute)
    {
        if (auto hit = find(key)) {
            return *std::move(hit);
        }
        return insert(key, std::invoke(std::forward<F>(compute)));
    }

    [[nodiscard]] std::size_t size() const;
    void clear();

    /// Overwrites a cell regardless of the write-once rule. Test harnesses use
    /// this to corrupt one entry and check that verifiers notice.
    void inject_fault(const CacheKey& key, Rational value);

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<CacheKey, Rational, CacheKeyHash> cells_;
};

/// Process-wide cache used when callers do not pass one explicitly.
TriangleCache& default_cache();

} // namespace polybell

#endif
