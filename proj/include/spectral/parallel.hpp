#pragma once

#include <cstddef>
#include <functional>

namespace spectral {

/// Resolves the worker count: `requested` if nonzero, else the
/// SPECTRAL_WORKERS environment variable, else hardware concurrency.
unsigned resolve_workers(unsigned requested = 0);

/// Runs fn(i) for i in [0, count) on `workers` threads with a static stripe.
/// fn must be safe to call concurrently for distinct i.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace spectral
