#ifndef POLYBELL_PARALLEL_HPP
#define POLYBELL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace polybell
{

/// Worker count: POLYBELL_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs task(i) for i in [0, count) on up to thread_count() threads.
/// Tasks must write to disjoint outputs; the first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

} // namespace polybell

#endif
