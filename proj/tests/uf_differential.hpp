#pragma once

#include <cstdint>

// Random union/undo sequences run side by side on RollbackUnionFind and the
// naive oracle, comparing classes, parities, sizes, boundaries, completion
// flags and class counts after every step.
struct DifferentialSummary {
    long sequences = 0;
    long steps = 0;
    long mismatches = 0;
    long depth_violations = 0;
};

DifferentialSummary run_uf_differential(long sequences, std::uint64_t seed);
