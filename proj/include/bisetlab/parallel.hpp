#pragma once

#include <functional>

namespace bisetlab {

/// Worker count used by parallel_for (default 1).
void set_thread_count(int n);
int thread_count();

/// Runs fn(0..n-1), spread over thread_count() threads. Results must be
/// written to per-index slots; the first exception thrown is rethrown.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace bisetlab
