#pragma once

#include <cstddef>
#include <functional>

namespace weyl {

/// Thread cap for internal parallel loops. Reads WEYL_LAB_THREADS once
/// (clamped to [1, hardware_concurrency]); defaults to hardware_concurrency.
int max_threads();

/// Chunked parallel loop over [0, n). Each index is visited exactly once and
/// workers write to disjoint slots, so results are deterministic regardless
/// of the thread count. Falls back to a serial loop for small n.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace weyl
