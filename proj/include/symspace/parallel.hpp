#pragma once

#include <cstddef>
#include <functional>

namespace symspace {

// Worker count: SYMSPACE_THREADS if set and positive, else hardware threads.
std::size_t thread_count();

// Calls body(i) for i in [0, n). Each index runs exactly once; callers write
// into preallocated slots and reduce sequentially, so results do not depend
// on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace symspace
