#pragma once

#include <cstddef>
#include <functional>

namespace mandelstam {

// Worker count: explicit setting wins, then MANDELSTAM_FORGE_THREADS, then
// hardware concurrency.
int thread_count();
void set_thread_count(int n); // n <= 0 resets to automatic

// Deterministic parallel loop: body(i) for i in [0, n); each index is
// written independently by exactly one worker.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace mandelstam
