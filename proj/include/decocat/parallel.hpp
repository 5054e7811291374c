#pragma once

#include <cstddef>
#include <functional>

namespace decocat {

// Worker count: DECOCAT_THREADS if set to a positive integer, else hardware concurrency.
std::size_t default_thread_count();

/// Calls body(i) for i in [0, count) on up to `threads` workers. Indices are
/// handed out dynamically; body must only write state owned by index i.
/// The first exception thrown by body is rethrown after all workers join.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace decocat
