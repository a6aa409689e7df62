#pragma once

#include <functional>

namespace ptt {

/// Resolved worker count: `requested` if positive, else the PT_TRIMER_WORKERS
/// environment variable, else hardware concurrency.
int resolve_workers(int requested);

/// Fork-join loop over [0, n): static contiguous partition across workers.
/// Workers only affect wall time; each index writes its own output slot, so
/// results are identical for any worker count.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

}  // namespace ptt
