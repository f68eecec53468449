#pragma once

#include <cstddef>
#include <functional>

namespace primcover {

/// Worker threads to use: hardware concurrency, capped by the
/// PRIMCOVER_THREADS environment variable when it holds a positive integer.
std::size_t worker_count();

/// Runs body(i) for every i in [0, count). Each index is handled by exactly
/// one worker; callers write results into per-index slots so the outcome does
/// not depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace primcover
