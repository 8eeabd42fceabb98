#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "maxdist/geom.hpp"

namespace maxdist {

struct IndexPair {
    Index a = kNoIndex;
    Index b = kNoIndex;
    friend bool operator==(const IndexPair& x, const IndexPair& y) {
        return x.a == y.a && x.b == y.b;
    }
};

// One region shrink during the pruning pipeline.
struct ReduceEvent {
    unsigned region = 0;
    std::size_t before = 0;
    std::size_t after = 0;
};

// A neighbor region pair skipped because the current estimate already beats
// the geometric bound for that pair. d_sq_at_skip is the estimate in force
// when the pair was dropped.
struct SkipEvent {
    unsigned region_a = 0;
    unsigned region_b = 0;
    double d_sq_at_skip = 0.0;
};

struct Stats {
    // Realized point-pair evaluations in the search (corner-distance
    // evaluations are not pair evaluations and are not counted here).
    std::uint64_t distance_evals = 0;
    std::size_t hull_size = 0;
    // Points entering the quadratic cross-region stages (0 for brute force;
    // hull size for the hull baselines).
    std::size_t survivors = 0;

    // Stage breakdown for the pruning algorithm.
    std::uint64_t seed_evals = 0;
    std::uint64_t refresh_evals = 0;
    std::uint64_t diagonal_evals = 0;
    std::uint64_t neighbor_evals = 0;
    std::size_t neighbor_pairs_tested = 0;
    std::size_t neighbor_pairs_skipped = 0;
    bool diagonal_stage_ran = false;
    bool neighbor_stage_ran = false;
    std::vector<ReduceEvent> reduce_log;
    std::vector<SkipEvent> skip_log;
};

struct DiameterResult {
    double dist_sq = 0.0;
    double dist = 0.0;
    IndexPair pair;
    Stats stats;
};

}  // namespace maxdist
