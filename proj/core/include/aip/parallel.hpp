#pragma once

#include <functional>

namespace aip {

/// Worker count: AIP_LAB_THREADS caps hardware_concurrency; at least 1.
int worker_count();

/// Runs fn(i) for i in [begin, end) across workers. Results must be written
/// to per-index slots; the schedule never affects output order.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}  // namespace aip
