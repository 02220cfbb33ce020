#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace wmnorm::detail {

/// Half-open index range [begin, end).
struct Chunk
{
    std::size_t begin = 0;
    std::size_t end   = 0;
};

/// Splits [begin, end) into at most `parts` contiguous chunks of near-equal size, in order.
inline std::vector<Chunk> partition(std::size_t begin, std::size_t end, std::size_t parts)
{
    std::vector<Chunk> out;
    const std::size_t total = end > begin ? end - begin : 0;
    parts = std::max<std::size_t>(1, std::min(parts, std::max<std::size_t>(total, 1)));
    std::size_t lo = begin;
    for (std::size_t i = 0; i < parts; ++i) {
        const std::size_t len = total / parts + (i < total % parts ? 1 : 0);
        out.push_back({lo, lo + len});
        lo += len;
    }
    return out;
}

/*!
    Runs body(chunk_index) for every chunk index in [0, count) on up to `threads` threads. Exceptions are captured
    per chunk and the one from the lowest chunk index is rethrown after all threads join.
*/
template <typename Body>
void run_chunks(std::size_t count, std::size_t threads, Body&& body)
{
    std::vector<std::exception_ptr> errors(count);
    auto guarded = [&](std::size_t i) {
        try {
            body(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            guarded(i);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t workers = std::min(threads, count);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < count; i += workers)
                    guarded(i);
            });
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace wmnorm::detail
