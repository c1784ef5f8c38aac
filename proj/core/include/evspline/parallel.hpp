#pragma once

#include <functional>

namespace evs {

// Global worker count for parallel_for. 1 disables threading entirely.
// All parallel loops in this library partition disjoint output ranges,
// so results are bit-identical for any thread count.
void set_thread_count(int n);
int thread_count();

// Runs fn(i) for i in [begin, end), split into contiguous chunks across
// the worker pool. fn must only write state owned by index i.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}  // namespace evs
