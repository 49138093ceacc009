#pragma once

#include <cstdint>
#include <functional>

namespace angulator {

// Number of worker threads exhaustive scans may use: hardware concurrency,
// capped by the ANGULATOR_THREADS environment variable when it is set.
// A set but non-numeric or non-positive value is a DomainError.
int worker_count();

// Splits [0, count) into contiguous chunks and runs body(worker, lo, hi) on
// one thread per chunk.  Workers are indexed 0..w-1 in range order, so a
// caller that keeps per-worker results and merges them by index gets a
// deterministic combined result.  Small inputs run inline on worker 0.
void parallel_chunks(std::uint64_t count, std::uint64_t min_per_worker,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& body);

} // namespace angulator
