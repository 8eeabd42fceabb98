#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "maxdist/datagen.hpp"
#include "maxdist/fast.hpp"
#include "maxdist/reference.hpp"
#include "maxdist/result.hpp"

namespace maxdist {

enum class Algo { brute, hull_bf, hull_calipers, fast_circular, fast_linear };

std::string to_string(Algo a);
// Accepts the five canonical names plus "fast" as an alias for fast_circular.
Algo algo_from_string(const std::string& name);

struct BenchRecord {
    Algo algo = Algo::brute;
    std::size_t n = 0;
    int dim = 2;
    std::string dist = "uniform";
    std::uint64_t seed = 0;
    double aspect = 1.0;
    std::size_t reps = 1;
    std::int64_t wall_ns = 0;
    double diameter = 0.0;
    std::uint64_t distance_evals = 0;
    std::size_t hull_size = 0;
    std::size_t survivors = 0;
};

// Speedups for one (n, dist) group; NaN marks a missing comparand.
struct RatioRow {
    std::size_t n = 0;
    std::string dist;
    double bf_over_hull = 0.0;
    double bf_over_fast = 0.0;
    double hull_over_fast = 0.0;
};

struct SkippedCase {
    Algo algo = Algo::brute;
    std::size_t n = 0;
    std::string dist;
    std::uint64_t seed = 0;
    std::string reason;
};

struct BenchReport {
    std::vector<BenchRecord> records;
    std::vector<RatioRow> ratios;
    std::vector<SkippedCase> skipped;
};

struct SweepConfig {
    std::vector<std::size_t> sizes;
    std::vector<Distribution> dists;
    std::vector<Algo> algos;
    std::vector<std::uint64_t> seeds;
    std::size_t reps = 3;
    int dim = 2;
    double aspect = 1.0;
    std::size_t bf_ceiling = 200000;  // brute force skipped above this n
};

namespace detail {

template <int Dim>
DiameterResult run_algo(Algo algo, const PointSet<Dim>& ps) {
    switch (algo) {
        case Algo::brute:
            return brute_force_diameter<Dim>(ps);
        case Algo::hull_bf:
        case Algo::hull_calipers:
            if constexpr (Dim == 2) {
                return algo == Algo::hull_bf ? hull_diameter_bf(ps) : hull_diameter_calipers(ps);
            } else {
                throw std::invalid_argument("hull baseline is planar only");
            }
        case Algo::fast_circular:
            return max_distance<Dim>(ps);
        case Algo::fast_linear: {
            PruneConfig cfg;
            cfg.predicate = FilterPredicate::linear_chord;
            return max_distance<Dim>(ps, cfg);
        }
    }
    throw std::invalid_argument("unknown algorithm");
}

std::int64_t median_ns(std::vector<std::int64_t> times);

}  // namespace detail

// One untimed warmup, then reps timed executions on the monotonic clock;
// wall_ns is the median, counters come from the last execution. The caller
// fills in dataset metadata (dist, seed, aspect).
template <int Dim>
BenchRecord run_case(Algo algo, const PointSet<Dim>& ps, std::size_t reps) {
    if (reps < 1) throw std::invalid_argument("reps must be at least 1");
    if (ps.size() < 2) throw std::invalid_argument("need at least two points");
    (void)detail::run_algo<Dim>(algo, ps);  // warmup

    std::vector<std::int64_t> times(reps);
    DiameterResult last;
    for (std::size_t r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        last = detail::run_algo<Dim>(algo, ps);
        const auto t1 = std::chrono::steady_clock::now();
        times[r] = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    }

    BenchRecord rec;
    rec.algo = algo;
    rec.n = ps.size();
    rec.dim = Dim;
    rec.reps = reps;
    rec.wall_ns = detail::median_ns(std::move(times));
    rec.diameter = last.dist;
    rec.distance_evals = last.stats.distance_evals;
    rec.hull_size = last.stats.hull_size;
    rec.survivors = last.stats.survivors;
    return rec;
}

// Cartesian product of sizes x dists x seeds x algos; each dataset is
// generated once and shared by all algorithms so diameters are comparable.
BenchReport sweep(const SweepConfig& cfg);

enum class EmitFormat { csv, json };

// csv writes the record table to destination and the ratio table next to it
// (see ratio_path_for); json writes a single file with records, ratios and
// skipped cases.
void emit(const BenchReport& report, EmitFormat format, const std::filesystem::path& destination);

std::filesystem::path ratio_path_for(const std::filesystem::path& records_path);

}  // namespace maxdist
