#pragma once

#include <cstddef>
#include <functional>

namespace meshspectra {

/// Worker count: hardware concurrency capped by the MESHSPECTRA_THREADS
/// environment variable (values < 1 mean 1).
int max_threads();

/// Runs fn(0..count-1) across up to `threads` workers (default max_threads()).
/// Indices are chunked contiguously; exceptions propagate to the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  int threads = 0);

}  // namespace meshspectra
