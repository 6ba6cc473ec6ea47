#include "kawahara/util.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace kawahara {

int max_threads() {
    static int cached = [] {
        if (const char* env = std::getenv("KAWAHARA_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        unsigned hc = std::thread::hardware_concurrency();
        return hc ? int(hc) : 1;
    }();
    return cached;
}

void parallel_for(int n, const std::function<void(int)>& f) {
    int workers = std::min(max_threads(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                f(i);
            }
        });
    for (auto& th : pool) th.join();
}

} // namespace kawahara
