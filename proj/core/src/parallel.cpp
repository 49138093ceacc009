#include "angulator/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "angulator/errors.hpp"

namespace angulator {

int worker_count() {
    static const int cached = [] {
        int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        const char* env = std::getenv("ANGULATOR_THREADS");
        if (env == nullptr) return hw;
        std::string text(env);
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("ANGULATOR_THREADS must be a positive integer, got \"" + text + "\"");
        long value = std::strtol(text.c_str(), nullptr, 10);
        if (value < 1)
            throw DomainError("ANGULATOR_THREADS must be a positive integer, got \"" + text + "\"");
        return static_cast<int>(std::min<long>(value, hw));
    }();
    return cached;
}

void parallel_chunks(std::uint64_t count, std::uint64_t min_per_worker,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& body) {
    if (count == 0) return;
    std::uint64_t limit = std::max<std::uint64_t>(1, min_per_worker);
    int workers = static_cast<int>(std::min<std::uint64_t>(worker_count(), (count + limit - 1) / limit));
    if (workers <= 1) {
        body(0, 0, count);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::uint64_t chunk = count / workers;
    std::uint64_t extra = count % workers;
    std::uint64_t lo = 0;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
        threads.emplace_back([&body, w, lo, hi] { body(w, lo, hi); });
        lo = hi;
    }
    for (auto& t : threads) t.join();
}

} // namespace angulator
