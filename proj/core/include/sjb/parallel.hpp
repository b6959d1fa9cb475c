#pragma once

#include <cstddef>
#include <functional>

namespace sjb {

/// Worker count: SJB_THREADS env var if set, else hardware concurrency.
int default_workers();

/// Runs fn(0..count-1) across workers. fn must be safe to call concurrently
/// on distinct indices; iteration order is unspecified. workers <= 0 picks
/// the default.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  int workers = 0);

} // namespace sjb
