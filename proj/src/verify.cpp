#include "maxdist/verify.hpp"

#include <random>
#include <stdexcept>

#include "maxdist/pointfile.hpp"
#include "maxdist/reference.hpp"

namespace maxdist {

namespace {

// Every parameter is drawn unconditionally so the GenSpec stream is stable
// no matter which distribution comes up.
GenSpec draw_spec(std::mt19937_64& rng, const VerifyOptions& opt) {
    const auto& dists = all_distributions();
    GenSpec spec;
    spec.dist = dists[std::uniform_int_distribution<std::size_t>(0, dists.size() - 1)(rng)];
    spec.dim = opt.dim == 0 ? 2 + static_cast<int>(rng() & 1u) : opt.dim;
    spec.n = std::uniform_int_distribution<std::size_t>(2, opt.max_n)(rng);
    spec.seed = rng();
    spec.aspect = std::uniform_real_distribution<double>(1.0, 4.0)(rng);
    spec.sigma = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
    spec.clusters = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    spec.jitter = std::uniform_real_distribution<double>(0.0, 0.25)(rng);
    spec.radius = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
    return spec;
}

template <int Dim>
void check_one(const GenSpec& spec, const VerifyOptions& opt,
               const std::function<DiameterResult(const PointSet<Dim>&, const PruneConfig&)>& fast,
               std::size_t trial, VerifyOutcome& out) {
    const PointSet<Dim> ps = generate<Dim>(spec);
    const DiameterResult oracle = brute_force_diameter<Dim>(ps);
    for (const FilterPredicate pred :
         {FilterPredicate::circular, FilterPredicate::linear_chord}) {
        PruneConfig cfg;
        cfg.predicate = pred;
        cfg.counters = false;
        const DiameterResult got = fast(ps, cfg);
        if (got.dist_sq == oracle.dist_sq) continue;

        Mismatch m;
        m.spec = spec;
        m.algo = pred == FilterPredicate::circular ? "fast_circular" : "fast_linear";
        m.expected_sq = oracle.dist_sq;
        m.actual_sq = got.dist_sq;
        if (!opt.dump_dir.empty()) {
            std::filesystem::create_directories(opt.dump_dir);
            m.dump_path =
                opt.dump_dir / ("mismatch_t" + std::to_string(trial) + "_" + m.algo + ".pts");
            PointFileHeader h;
            h.seed = spec.seed;
            h.dist = to_string(spec.dist);
            write_point_file<Dim>(m.dump_path, h, ps);
        }
        out.mismatches.push_back(std::move(m));
    }
}

}  // namespace

VerifyOutcome run_verification(const VerifyOptions& opt) {
    return run_verification(opt, VerifyHooks{});
}

VerifyOutcome run_verification(const VerifyOptions& opt, const VerifyHooks& hooks) {
    if (opt.trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (opt.max_n < 2) throw std::invalid_argument("max-n must be at least 2");
    if (opt.dim != 0 && opt.dim != 2 && opt.dim != 3)
        throw std::invalid_argument("dim must be 0, 2 or 3");

    std::function<DiameterResult(const PointSet<2>&, const PruneConfig&)> fast2 = hooks.fast2;
    if (!fast2)
        fast2 = [](const PointSet<2>& ps, const PruneConfig& cfg) {
            return max_distance<2>(ps, cfg);
        };
    std::function<DiameterResult(const PointSet<3>&, const PruneConfig&)> fast3 = hooks.fast3;
    if (!fast3)
        fast3 = [](const PointSet<3>& ps, const PruneConfig& cfg) {
            return max_distance<3>(ps, cfg);
        };

    std::mt19937_64 rng(opt.seed);
    VerifyOutcome out;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const GenSpec spec = draw_spec(rng, opt);
        if (spec.dim == 2)
            check_one<2>(spec, opt, fast2, t, out);
        else
            check_one<3>(spec, opt, fast3, t, out);
        ++out.trials_run;
    }
    return out;
}

}  // namespace maxdist
