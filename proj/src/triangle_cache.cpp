#include "polybell/triangle_cache.hpp"

#include <mutex>
#include <utility>

namespace polybell
{

std::optional<Rational> TriangleCache::find(const CacheKey& key) const
{
    std::shared_lock lock(mutex_);
    if (auto it = cells_.find(key); it != cells_.end()) {
        return it->second;
    }
    return std::nullopt;
}

Rational TriangleCache::insert(const CacheKey& key, Rational value)
{
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cells_.try_emplace(key, std::move(value));
    return it->second;
}

std::size_t TriangleCache::size() const
{
    std::shared_lock lock(mutex_);
    return cells_.size();
}

void TriangleCache::clear()
{
    std::unique_lock lock(mutex_);
    cells_.clear();
}

void TriangleCache::inject_fault(const CacheKey& key, Rational value)
{
    std::unique_lock lock(mutex_);
    cells_.insert_or_assign(key, std::move(value));
}

TriangleCache& default_cache()
{
    static TriangleCache cache;
    return cache;
}

} // namespace polybell
