#include "curvkit/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace curvkit {

unsigned worker_count() {
    if (const char* env = std::getenv("CURVKIT_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v <= 0) return 0;
            return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            return 0;  // unparsable cap: run serial
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& fn) {
    const unsigned workers = worker_count();
    if (workers <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const unsigned used = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(used);
    pool.reserve(used);
    for (unsigned w = 0; w < used; ++w) {
        pool.emplace_back([&, w]() {
            const std::uint64_t lo = count * w / used;
            const std::uint64_t hi = count * (w + 1) / used;
            try {
                for (std::uint64_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace curvkit
