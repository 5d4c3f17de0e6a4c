#pragma once

#include <cstddef>
#include <functional>

namespace padic::detail {

/// Worker count: PADIC_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

/// Runs fn(0..n-1) on up to thread_count() threads; rethrows the first
/// exception after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace padic::detail
