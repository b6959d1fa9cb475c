#include "sjb/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace sjb {

int default_workers() {
    if (const char* env = std::getenv("SJB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  int workers) {
    if (workers <= 0)
        workers = default_workers();
    if (count == 0)
        return;
    if (workers == 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    pool.reserve(nthreads - 1);
    for (std::size_t w = 1; w < nthreads; ++w)
        pool.emplace_back(run);
    run();
    for (auto& th : pool)
        th.join();
}

} // namespace sjb
