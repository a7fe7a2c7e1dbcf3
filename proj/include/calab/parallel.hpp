#pragma once

#include <cstddef>
#include <functional>

namespace calab {

// Worker count used by parallel_for. Defaults to 1.
void set_thread_count(unsigned n);
unsigned thread_count();

// Calls body(i) for every i in [0, n). Indices are split into contiguous
// chunks, one per worker; callers write results into per-index slots and merge
// in index order so the outcome does not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace calab
