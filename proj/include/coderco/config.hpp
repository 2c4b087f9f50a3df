#pragma once

#include <cstdint>

namespace coderco {

// Process-wide limits and defaults. The CLI seeds these from
// CODERCO_INDEX_BOUND / CODERCO_MAX_DEGREE / CODERCO_SEED; library users may
// assign them directly. Set before launching concurrent work.
struct Config {
    // Largest admissible matrix dimension (rows or columns). Tensor-power
    // assembly fails fast with OverflowError instead of thrashing.
    std::int64_t index_bound = 10'000'000;
    // Largest degree for which operator matrices may be assembled.
    int max_degree = 4;
    // Default seed for randomized sweeps.
    std::uint64_t seed = 0;
};

Config& config();

}  // namespace coderco
