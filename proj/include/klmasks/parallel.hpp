#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace klmasks {

// Worker count: KLMASKS_THREADS when set and positive, else the hardware
// concurrency (at least 1).
int thread_count();

// Runs fn(i) for i in [0, n) on up to thread_count() workers. Each index is
// handled exactly once; callers write results into slot i so the outcome
// does not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F fn)
{
    std::vector<T> out(n);
    parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

}  // namespace klmasks
