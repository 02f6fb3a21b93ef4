#include "taub/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace taub {

namespace {

std::atomic<unsigned> g_threads{0};

unsigned default_threads()
{
    if (const char* env = std::getenv("TAUB_LAB_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

unsigned thread_count()
{
    unsigned t = g_threads.load();
    if (t == 0) {
        t = default_threads();
        g_threads.store(t);
    }
    return t;
}

void set_thread_count(unsigned threads) { g_threads.store(std::max(1u, threads)); }

void parallel_for_chunks(std::size_t chunks, const std::function<void(std::size_t)>& body)
{
    const std::size_t workers = std::min<std::size_t>(thread_count(), chunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) body(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t c = next++; c < chunks; c = next++) {
            try {
                body(c);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace taub
