#pragma once

#include <functional>

namespace cc {

// Worker count: CRYSTALCONE_THREADS when set (>= 1), else hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads. Exceptions are
// rethrown on the caller (the first one by index).
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace cc
