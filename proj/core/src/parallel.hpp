#ifndef NEARIND_SRC_PARALLEL_HPP
#define NEARIND_SRC_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace nearind::detail {

// Runs body(begin, end, worker) over `jobs` contiguous slices of [0, count).
// Exceptions from workers are rethrown on the calling thread.
template <class Body>
void parallel_slices(std::size_t count, int jobs, Body&& body) {
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                                                        std::max<std::size_t>(count, 1));
    if (workers == 1) {
        body(std::size_t{0}, count, std::size_t{0});
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = count * w / workers;
        const std::size_t end = count * (w + 1) / workers;
        threads.emplace_back([&, begin, end, w] {
            try {
                body(begin, end, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace nearind::detail

#endif  // NEARIND_SRC_PARALLEL_HPP
