#pragma once

#include <cstddef>
#include <functional>

namespace bwalk {

/// Run body(i) for i in [0, count) across up to `workers` threads
/// (0 = hardware concurrency). Falls back to a plain loop for one worker
/// or tiny counts; exceptions from workers are rethrown on the caller.
void parallel_for(size_t count, size_t workers, const std::function<void(size_t)>& body);

} // namespace bwalk
