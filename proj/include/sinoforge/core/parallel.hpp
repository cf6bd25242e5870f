#pragma once

#include <functional>

namespace sinoforge {

/// Worker budget: the SINOFORGE_THREADS environment variable when set to a
/// positive integer, otherwise hardware concurrency (at least 1).
int thread_budget();

/// Run body(i) for i in [begin, end), split into contiguous chunks across the
/// thread budget. Bodies must write disjoint outputs; results are then
/// independent of the thread count. Runs inline when the range is small or
/// the budget is 1.
void parallel_for(int begin, int end, const std::function<void(int)>& body);

} // namespace sinoforge
