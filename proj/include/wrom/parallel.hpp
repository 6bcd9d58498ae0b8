#pragma once

#include <wrom/types.hpp>

#include <functional>

namespace wrom {

/// Runs body(i) for i in [0, n) on up to `threads` worker threads with static
/// contiguous partitioning. Results must be written to disjoint slots so the
/// outcome is identical for any thread count. threads <= 1 runs inline.
/// The first exception thrown by any worker is rethrown on the caller.
void parallel_for(Index n, int threads, const std::function<void(Index)>& body);

}  // namespace wrom
