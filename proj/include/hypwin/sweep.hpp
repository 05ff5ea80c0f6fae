#pragma once

#include "hypwin/transform.hpp"

#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

namespace hypwin {

/// Evaluates f(0) .. f(count - 1), in parallel when requested, and returns
/// the results in index order. The first exception thrown by any point is
/// rethrown after the loop.
template <class F>
auto parallel_map(std::size_t count, F&& f, dft::Execution exec = dft::Execution::Parallel)
    -> std::vector<decltype(f(std::size_t{}))>
{
    using R = decltype(f(std::size_t{}));
    std::vector<std::optional<R>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<std::ptrdiff_t>(count);

#pragma omp parallel for schedule(dynamic) if (exec == dft::Execution::Parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            slots[i].emplace(f(static_cast<std::size_t>(i)));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }

    std::vector<R> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

} // namespace hypwin
