#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxdist/bench.hpp"
#include "maxdist/datagen.hpp"
#include "maxdist/fast.hpp"
#include "maxdist/pointfile.hpp"
#include "maxdist/reference.hpp"
#include "maxdist/verify.hpp"

namespace {

using namespace maxdist;

int run_gen(GenSpec spec, const std::string& dist_name, const std::string& out_path) {
    spec.dist = distribution_from_string(dist_name);
    PointFileHeader header;
    header.seed = spec.seed;
    header.dist = dist_name;
    if (spec.dim == 2)
        write_point_file<2>(out_path, header, generate<2>(spec));
    else if (spec.dim == 3)
        write_point_file<3>(out_path, header, generate<3>(spec));
    else
        throw std::invalid_argument("dim must be 2 or 3");
    std::cout << "n=" << spec.n << " " << out_path << "\n";
    return 0;
}

nlohmann::json stats_json(const Stats& st) {
    nlohmann::json j{
        {"distance_evals", st.distance_evals},
        {"hull_size", st.hull_size},
        {"survivors", st.survivors},
        {"seed_evals", st.seed_evals},
        {"refresh_evals", st.refresh_evals},
        {"diagonal_evals", st.diagonal_evals},
        {"neighbor_evals", st.neighbor_evals},
        {"neighbor_pairs_tested", st.neighbor_pairs_tested},
        {"neighbor_pairs_skipped", st.neighbor_pairs_skipped},
        {"diagonal_stage_ran", st.diagonal_stage_ran},
        {"neighbor_stage_ran", st.neighbor_stage_ran},
    };
    j["reduce_log"] = nlohmann::json::array();
    for (const auto& e : st.reduce_log)
        j["reduce_log"].push_back(
            {{"region", e.region}, {"before", e.before}, {"after", e.after}});
    j["skip_log"] = nlohmann::json::array();
    for (const auto& e : st.skip_log)
        j["skip_log"].push_back({{"region_a", e.region_a},
                                 {"region_b", e.region_b},
                                 {"d_sq_at_skip", e.d_sq_at_skip}});
    return j;
}

int run_diameter(const std::string& in_path, const std::string& algo_name,
                 const std::string& filter_name, bool as_json) {
    Algo algo;
    if (algo_name == "fast")
        algo = filter_name == "linear" ? Algo::fast_linear : Algo::fast_circular;
    else
        algo = algo_from_string(algo_name);

    const PointFileData data = read_point_file(in_path);
    DiameterResult res;
    if (data.header.dim == 2)
        res = detail::run_algo<2>(algo, data.points<2>());
    else
        res = detail::run_algo<3>(algo, data.points<3>());

    if (as_json) {
        nlohmann::json j{
            {"algo", to_string(algo)},
            {"dist", res.dist},
            {"dist_sq", res.dist_sq},
            {"pair", {{"a", res.pair.a}, {"b", res.pair.b}}},
            {"stats", stats_json(res.stats)},
        };
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << format_double(res.dist) << "\n";
    std::cout << "dist_sq " << format_double(res.dist_sq) << "\n";
    std::cout << "pair " << res.pair.a << " " << res.pair.b << "\n";
    std::cout << "distance_evals " << res.stats.distance_evals << "\n";
    std::cout << "hull_size " << res.stats.hull_size << "\n";
    std::cout << "survivors " << res.stats.survivors << "\n";
    return 0;
}

int run_bench(const std::vector<std::size_t>& sizes, const std::vector<std::string>& dist_names,
              const std::vector<std::string>& algo_names,
              const std::vector<std::uint64_t>& seeds, std::size_t reps, std::size_t bf_ceiling,
              int dim, double aspect, const std::string& out_path) {
    SweepConfig cfg;
    cfg.sizes = sizes;
    for (const auto& d : dist_names) cfg.dists.push_back(distribution_from_string(d));
    for (const auto& a : algo_names) cfg.algos.push_back(algo_from_string(a));
    cfg.seeds = seeds;
    cfg.reps = reps;
    cfg.bf_ceiling = bf_ceiling;
    cfg.dim = dim;
    cfg.aspect = aspect;

    const BenchReport report = sweep(cfg);
    const std::filesystem::path dest(out_path);
    const bool json = dest.extension() == ".json";
    emit(report, json ? EmitFormat::json : EmitFormat::csv, dest);
    std::cout << "wrote " << dest.string() << "\n";
    if (!json) std::cout << "wrote " << ratio_path_for(dest).string() << "\n";
    return 0;
}

int run_verify(const VerifyOptions& opt) {
    VerifyOutcome outcome = run_verification(opt);
    for (const auto& m : outcome.mismatches) {
        std::cerr << "MISMATCH " << m.algo << " expected_sq " << format_double(m.expected_sq)
                  << " actual_sq " << format_double(m.actual_sq) << "\n";
        std::cerr << "  spec: " << to_string(m.spec) << "\n";
        if (!m.dump_path.empty()) std::cerr << "  replay: " << m.dump_path.string() << "\n";
    }
    std::cout << "trials " << outcome.trials_run << " mismatches " << outcome.mismatches.size()
              << "\n";
    return outcome.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact farthest-pair toolkit for planar and spatial point sets"};
    app.require_subcommand(1);
    int rc = 0;

    auto* gen = app.add_subcommand("gen", "Write a seeded point file");
    GenSpec gspec;
    std::string gen_dist = "uniform";
    std::string gen_out;
    gen->add_option("--dist", gen_dist, "uniform|gaussian|clusters|circle|collinear|duplicated");
    gen->add_option("--n", gspec.n, "point count")->required();
    gen->add_option("--seed", gspec.seed, "generator seed");
    gen->add_option("--dim", gspec.dim, "2 or 3");
    gen->add_option("--aspect", gspec.aspect, "box x-side (other sides are 1)");
    gen->add_option("--sigma", gspec.sigma, "gaussian / cluster spread");
    gen->add_option("--clusters", gspec.clusters, "cluster count");
    gen->add_option("--jitter", gspec.jitter, "radial jitter for circle");
    gen->add_option("--out", gen_out, "output file")->required();
    gen->callback([&] { rc = run_gen(gspec, gen_dist, gen_out); });

    auto* diam = app.add_subcommand("diameter", "Farthest pair of a point file");
    std::string diam_in;
    std::string diam_algo = "fast";
    std::string diam_filter = "circular";
    bool diam_json = false;
    diam->add_option("--in", diam_in, "input point file")->required();
    diam->add_option("--algo", diam_algo,
                     "brute|hull_bf|hull_calipers|fast|fast_circular|fast_linear");
    diam->add_option("--filter", diam_filter, "circular|linear (applies to --algo fast)")
        ->check(CLI::IsMember({"circular", "linear"}));
    diam->add_flag("--json", diam_json, "emit the result as JSON");
    diam->callback([&] { rc = run_diameter(diam_in, diam_algo, diam_filter, diam_json); });

    auto* bench = app.add_subcommand("bench", "Timed sweep written as CSV or JSON");
    std::vector<std::size_t> bench_sizes;
    std::vector<std::string> bench_dists{"uniform"};
    std::vector<std::string> bench_algos{"brute", "hull_bf", "fast"};
    std::vector<std::uint64_t> bench_seeds{1, 2, 3};
    std::size_t bench_reps = 3;
    std::size_t bench_ceiling = 200000;
    int bench_dim = 2;
    double bench_aspect = 1.0;
    std::string bench_out = "bench.csv";
    bench->add_option("--sizes", bench_sizes, "point counts")->delimiter(',')->required();
    bench->add_option("--dists", bench_dists, "distributions")->delimiter(',');
    bench->add_option("--algos", bench_algos, "algorithms")->delimiter(',');
    bench->add_option("--seeds", bench_seeds, "dataset seeds")->delimiter(',');
    bench->add_option("--reps", bench_reps, "timed repetitions per case");
    bench->add_option("--bf-ceiling", bench_ceiling, "skip brute force above this n");
    bench->add_option("--dim", bench_dim, "2 or 3");
    bench->add_option("--aspect", bench_aspect, "box x-side");
    bench->add_option("--out", bench_out, "output file (.json switches format)");
    bench->callback([&] {
        rc = run_bench(bench_sizes, bench_dists, bench_algos, bench_seeds, bench_reps,
                       bench_ceiling, bench_dim, bench_aspect, bench_out);
    });

    auto* ver = app.add_subcommand("verify", "Differential check against the exhaustive scan");
    VerifyOptions vopt;
    ver->add_option("--trials", vopt.trials, "trial count");
    ver->add_option("--max-n", vopt.max_n, "points per trial drawn from [2, max-n]");
    ver->add_option("--seed", vopt.seed, "trial stream seed");
    ver->add_option("--dim", vopt.dim, "0 = mix of 2 and 3");
    ver->callback([&] {
        vopt.dump_dir = std::filesystem::current_path();
        rc = run_verify(vopt);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
