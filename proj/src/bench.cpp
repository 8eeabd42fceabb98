#include "maxdist/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>

#include <json.hpp>

#include "maxdist/pointfile.hpp"

namespace maxdist {

std::string to_string(Algo a) {
    switch (a) {
        case Algo::brute: return "brute";
        case Algo::hull_bf: return "hull_bf";
        case Algo::hull_calipers: return "hull_calipers";
        case Algo::fast_circular: return "fast_circular";
        case Algo::fast_linear: return "fast_linear";
    }
    throw std::invalid_argument("unknown algorithm");
}

Algo algo_from_string(const std::string& name) {
    if (name == "brute") return Algo::brute;
    if (name == "hull_bf") return Algo::hull_bf;
    if (name == "hull_calipers") return Algo::hull_calipers;
    if (name == "fast" || name == "fast_circular") return Algo::fast_circular;
    if (name == "fast_linear") return Algo::fast_linear;
    throw std::invalid_argument("unknown algorithm: " + name);
}

namespace detail {

std::int64_t median_ns(std::vector<std::int64_t> times) {
    std::sort(times.begin(), times.end());
    const std::size_t m = times.size();
    if (m % 2 == 1) return times[m / 2];
    return (times[m / 2 - 1] + times[m / 2]) / 2;
}

}  // namespace detail

namespace {

double median_of(std::vector<double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size();
    if (m % 2 == 1) return v[m / 2];
    return 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

std::optional<std::int64_t> find_wall(const std::vector<BenchRecord>& records, Algo algo,
                                      std::size_t n, const std::string& dist,
                                      std::uint64_t seed) {
    for (const auto& r : records)
        if (r.algo == algo && r.n == n && r.dist == dist && r.seed == seed) return r.wall_ns;
    return std::nullopt;
}

// Table-2-style comparands: brute for "bf", hull_bf (falling back to
// calipers) for "hull", fast_circular (falling back to linear) for "fast".
std::optional<std::int64_t> find_first(const std::vector<BenchRecord>& records,
                                       std::initializer_list<Algo> algos, std::size_t n,
                                       const std::string& dist, std::uint64_t seed) {
    for (Algo a : algos)
        if (auto w = find_wall(records, a, n, dist, seed)) return w;
    return std::nullopt;
}

}  // namespace

BenchReport sweep(const SweepConfig& cfg) {
    if (cfg.sizes.empty() || cfg.dists.empty() || cfg.algos.empty() || cfg.seeds.empty())
        throw std::invalid_argument("empty sweep axis");
    if (cfg.dim != 2 && cfg.dim != 3) throw std::invalid_argument("dim must be 2 or 3");

    BenchReport report;
    for (std::size_t n : cfg.sizes)
        for (Distribution dist : cfg.dists)
            for (std::uint64_t seed : cfg.seeds) {
                GenSpec spec;
                spec.dist = dist;
                spec.n = n;
                spec.dim = cfg.dim;
                spec.seed = seed;
                spec.aspect = cfg.aspect;
                auto run_all = [&](const auto& ps) {
                    for (Algo algo : cfg.algos) {
                        if (algo == Algo::brute && n > cfg.bf_ceiling) {
                            report.skipped.push_back(
                                {algo, n, to_string(dist), seed, "above brute-force ceiling"});
                            continue;
                        }
                        BenchRecord rec = run_case(algo, ps, cfg.reps);
                        rec.dist = to_string(dist);
                        rec.seed = seed;
                        rec.aspect = cfg.aspect;
                        report.records.push_back(std::move(rec));
                    }
                };
                if (cfg.dim == 2)
                    run_all(generate<2>(spec));
                else
                    run_all(generate<3>(spec));
            }

    // Each ratio is the quotient of the two comparands' median wall_ns over
    // the seed set (every wall_ns is itself a median over reps).
    for (std::size_t n : cfg.sizes)
        for (Distribution dist : cfg.dists) {
            const std::string dname = to_string(dist);
            std::vector<double> bf, hull, fast;
            for (std::uint64_t seed : cfg.seeds) {
                if (const auto w = find_first(report.records, {Algo::brute}, n, dname, seed))
                    bf.push_back(double(*w));
                if (const auto w = find_first(report.records,
                                              {Algo::hull_bf, Algo::hull_calipers}, n, dname,
                                              seed))
                    hull.push_back(double(*w));
                if (const auto w = find_first(report.records,
                                              {Algo::fast_circular, Algo::fast_linear}, n, dname,
                                              seed))
                    fast.push_back(double(*w));
            }
            const double bf_med = median_of(std::move(bf));
            const double hull_med = median_of(std::move(hull));
            const double fast_med = median_of(std::move(fast));
            RatioRow row;
            row.n = n;
            row.dist = dname;
            row.bf_over_hull = bf_med / hull_med;
            row.bf_over_fast = bf_med / fast_med;
            row.hull_over_fast = hull_med / fast_med;
            report.ratios.push_back(std::move(row));
        }
    return report;
}

std::filesystem::path ratio_path_for(const std::filesystem::path& records_path) {
    std::filesystem::path p = records_path;
    p.replace_filename(records_path.stem().string() + "_ratios" +
                       records_path.extension().string());
    return p;
}

namespace {

std::string ratio_cell(double v) { return std::isnan(v) ? std::string() : format_double(v); }

nlohmann::json to_json(const BenchRecord& r) {
    return {
        {"algo", to_string(r.algo)},
        {"n", r.n},
        {"dim", r.dim},
        {"dist", r.dist},
        {"seed", r.seed},
        {"aspect", r.aspect},
        {"reps", r.reps},
        {"wall_ns", r.wall_ns},
        {"diameter", r.diameter},
        {"distance_evals", r.distance_evals},
        {"hull_size", r.hull_size},
        {"survivors", r.survivors},
    };
}

}  // namespace

void emit(const BenchReport& report, EmitFormat format, const std::filesystem::path& destination) {
    if (format == EmitFormat::csv) {
        std::ofstream out(destination);
        if (!out) throw std::runtime_error("cannot write " + destination.string());
        out << "algo,n,dim,dist,seed,aspect,reps,wall_ns,diameter,distance_evals,hull_size,"
               "survivors\n";
        for (const auto& r : report.records)
            out << to_string(r.algo) << ',' << r.n << ',' << r.dim << ',' << r.dist << ','
                << r.seed << ',' << format_double(r.aspect) << ',' << r.reps << ',' << r.wall_ns
                << ',' << format_double(r.diameter) << ',' << r.distance_evals << ','
                << r.hull_size << ',' << r.survivors << "\n";
        if (!out) throw std::runtime_error("write failed: " + destination.string());

        const std::filesystem::path rp = ratio_path_for(destination);
        std::ofstream rout(rp);
        if (!rout) throw std::runtime_error("cannot write " + rp.string());
        rout << "n,bf_over_hull,bf_over_fast,hull_over_fast\n";
        for (const auto& row : report.ratios)
            rout << row.n << ',' << ratio_cell(row.bf_over_hull) << ','
                 << ratio_cell(row.bf_over_fast) << ',' << ratio_cell(row.hull_over_fast) << "\n";
        if (!rout) throw std::runtime_error("write failed: " + rp.string());
        return;
    }

    nlohmann::json j;
    j["records"] = nlohmann::json::array();
    for (const auto& r : report.records) j["records"].push_back(to_json(r));
    j["ratios"] = nlohmann::json::array();
    for (const auto& row : report.ratios) {
        nlohmann::json rj{{"n", row.n}, {"dist", row.dist}};
        rj["bf_over_hull"] = row.bf_over_hull;    // NaN serializes as null
        rj["bf_over_fast"] = row.bf_over_fast;
        rj["hull_over_fast"] = row.hull_over_fast;
        j["ratios"].push_back(std::move(rj));
    }
    j["skipped"] = nlohmann::json::array();
    for (const auto& s : report.skipped)
        j["skipped"].push_back({{"algo", to_string(s.algo)},
                                {"n", s.n},
                                {"dist", s.dist},
                                {"seed", s.seed},
                                {"reason", s.reason}});
    std::ofstream out(destination);
    if (!out) throw std::runtime_error("cannot write " + destination.string());
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + destination.string());
}

}  // namespace maxdist
