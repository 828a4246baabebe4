#ifndef LEF_PARALLEL_HPP
#define LEF_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace lef {

// Worker cap: LANEFOWLER_THREADS if set (>=1), else hardware concurrency.
int worker_count();

// Runs fn(i) for i in [0, n) on up to worker_count() threads. Results must
// be written to per-index slots; iteration order within a thread is
// ascending, so output is deterministic regardless of scheduling. Exceptions
// are captured and the first one rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lef

#endif
