#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "maxdist/datagen.hpp"
#include "maxdist/fast.hpp"
#include "maxdist/result.hpp"

namespace maxdist {

struct VerifyOptions {
    std::size_t trials = 1000;
    std::size_t max_n = 256;
    std::uint64_t seed = 1;
    int dim = 0;                     // 0 draws the dimension per trial; 2 or 3 pins it
    std::filesystem::path dump_dir;  // empty: no replay files on mismatch
};

struct Mismatch {
    GenSpec spec;
    std::string algo;
    double expected_sq = 0.0;
    double actual_sq = 0.0;
    std::filesystem::path dump_path;  // empty unless dump_dir was set
};

struct VerifyOutcome {
    std::size_t trials_run = 0;
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Replaceable diameter implementations, so fault-injection tests can prove
// the harness actually catches a broken pruner. Unset hooks fall back to
// max_distance.
struct VerifyHooks {
    std::function<DiameterResult(const PointSet<2>&, const PruneConfig&)> fast2;
    std::function<DiameterResult(const PointSet<3>&, const PruneConfig&)> fast3;
};

// Differential check: each trial draws a random generator spec (every
// distribution, n in [2, max_n], random shape parameters), then compares the
// pruning search under both filter predicates against the exhaustive scan,
// requiring bit-exact dist_sq equality.
VerifyOutcome run_verification(const VerifyOptions& opt);
VerifyOutcome run_verification(const VerifyOptions& opt, const VerifyHooks& hooks);

}  // namespace maxdist
