#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <thread>
#include <vector>

namespace quadgen {

/// Worker count: explicit value if given, else QUADGEN_JOBS, else the
/// hardware concurrency (at least 1).
unsigned resolve_jobs(std::optional<unsigned> requested = std::nullopt);

/// Applies fn to every input on up to `jobs` threads. Results come back in
/// input order regardless of scheduling; the first exception by input index
/// is rethrown after all workers finish.
template <class Out, class In, class Fn>
std::vector<Out> parallel_map(std::span<const In> inputs, Fn fn, unsigned jobs) {
    const std::size_t n = inputs.size();
    std::vector<std::optional<Out>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    if (jobs == 0) jobs = 1;
    const std::size_t workers = std::min<std::size_t>(jobs, n == 0 ? 1 : n);

    auto run = [&](std::size_t w) {
        // strided assignment balances cost that grows with |D|
        for (std::size_t i = w; i < n; i += workers) {
            try {
                slots[i].emplace(fn(inputs[i]));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<Out> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

} // namespace quadgen
