#pragma once

#include <cstddef>
#include <functional>

namespace levykit {

// Number of worker threads: LEVYKIT_THREADS if set, hardware concurrency otherwise.
std::size_t thread_count();

// Index-parallel map with deterministic output: fn(i) must write only to slot i
// of its output. Falls back to a serial loop for small n or a single thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace levykit
