#include "crystalcone/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace cc {

int thread_count() {
    if (const char* env = std::getenv("CRYSTALCONE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

void parallel_for(int n, const std::function<void(int)>& body) {
    int workers = std::min(thread_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace cc
