#pragma once

#include <cstdint>
#include <functional>

namespace curvkit {

/// Worker count for sweep evaluation: the CURVKIT_THREADS environment
/// variable caps parallelism (0 = serial); unset falls back to the hardware
/// concurrency.
unsigned worker_count();

/// Run fn(i) for i in [0, count) across workers with a static block
/// partition. fn must only touch per-index state; results are therefore
/// independent of the worker count. Exceptions propagate after all workers
/// join.
void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& fn);

}  // namespace curvkit
