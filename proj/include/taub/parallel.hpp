#pragma once

#include <cstddef>
#include <functional>

namespace taub {

/// Worker cap used by the data-parallel kernels. Defaults to the
/// TAUB_LAB_THREADS environment variable, else hardware concurrency.
unsigned thread_count();
void set_thread_count(unsigned threads);

/// Runs body(chunk) for chunk in [0, chunks). Chunks are claimed dynamically,
/// so callers must make results depend only on the chunk index.
void parallel_for_chunks(std::size_t chunks, const std::function<void(std::size_t)>& body);

}  // namespace taub
