#pragma once

#include <functional>

namespace su11 {

// Runs fn(i) for i in [0, n) on up to `threads` workers over contiguous
// index chunks.  Each index is computed exactly once and workers write only
// their own indices, so results are independent of the thread count.
// threads <= 0 selects a hardware-based default.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace su11
