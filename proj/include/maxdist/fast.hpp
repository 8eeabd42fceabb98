#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "maxdist/geom.hpp"
#include "maxdist/result.hpp"

namespace maxdist {

enum class FilterPredicate { circular, linear_chord };

struct PruneConfig {
    FilterPredicate predicate = FilterPredicate::circular;
    bool neighbor_stage = true;
    bool counters = true;
};

struct Estimate {
    double d_sq = 0.0;
    IndexPair pair;
};

// Indices of the candidate seed points: per-axis min/max plus, for every box
// corner, the point farthest from and nearest to it. Ties keep the lowest
// index.
template <int Dim>
struct ExtremeSet {
    std::array<Index, 2 * Dim> axis_extreme{};  // [2j] argmin, [2j+1] argmax on axis j
    std::array<Index, region_count<Dim>()> corner_farthest{};
    std::array<Index, region_count<Dim>()> corner_nearest{};

    std::vector<Index> pool() const {
        std::vector<Index> q(axis_extreme.begin(), axis_extreme.end());
        q.insert(q.end(), corner_farthest.begin(), corner_farthest.end());
        q.insert(q.end(), corner_nearest.begin(), corner_nearest.end());
        std::sort(q.begin(), q.end());
        q.erase(std::unique(q.begin(), q.end()), q.end());
        return q;
    }
};

template <int Dim>
ExtremeSet<Dim> collect_extremes(const PointSet<Dim>& ps, const Box<Dim>& box) {
    if (ps.empty()) throw std::invalid_argument("empty input");
    constexpr unsigned R = region_count<Dim>();
    std::array<Point<Dim>, R> corners;
    for (unsigned m = 0; m < R; ++m)
        corners[m] = box.corner(static_cast<typename Box<Dim>::CornerType>(m));

    ExtremeSet<Dim> ex;
    std::array<double, Dim> lo, hi;
    std::array<double, R> far_d, near_d;
    for (int j = 0; j < Dim; ++j) lo[j] = hi[j] = ps[0][j];
    for (unsigned m = 0; m < R; ++m)
        far_d[m] = near_d[m] = squared_distance<Dim>(ps[0], corners[m]);

    for (Index i = 1; i < ps.size(); ++i) {
        const Point<Dim>& p = ps[i];
        for (int j = 0; j < Dim; ++j) {
            if (p[j] < lo[j]) {
                lo[j] = p[j];
                ex.axis_extreme[2 * j] = i;
            }
            if (p[j] > hi[j]) {
                hi[j] = p[j];
                ex.axis_extreme[2 * j + 1] = i;
            }
        }
        for (unsigned m = 0; m < R; ++m) {
            const double d = squared_distance<Dim>(p, corners[m]);
            if (d > far_d[m]) {
                far_d[m] = d;
                ex.corner_farthest[m] = i;
            }
            if (d < near_d[m]) {
                near_d[m] = d;
                ex.corner_nearest[m] = i;
            }
        }
    }
    return ex;
}

// Exhaustive scan over the (deduplicated) seed pool. A pool of one point
// yields d_sq = 0 with a sentinel pair.
template <int Dim>
Estimate initial_estimate(const ExtremeSet<Dim>& ex, const PointSet<Dim>& ps,
                          std::uint64_t* evals = nullptr) {
    const std::vector<Index> pool = ex.pool();
    Estimate best;
    std::uint64_t count = 0;
    for (std::size_t i = 0; i + 1 < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            const double d = squared_distance<Dim>(ps[pool[i]], ps[pool[j]]);
            ++count;
            if (best.pair.a == kNoIndex || d > best.d_sq) {
                best.d_sq = d;
                best.pair = {pool[i], pool[j]};
            }
        }
    if (evals) *evals += count;
    return best;
}

// Surviving point indices per orthant region, plus each region's survivor
// farthest from its opposite corner (XX_i) and that squared distance (d_i).
template <int Dim>
struct RegionPartition {
    std::array<std::vector<Index>, region_count<Dim>()> members;
    std::array<Index, region_count<Dim>()> xx;
    std::array<double, region_count<Dim>()> d_sq;

    RegionPartition() {
        xx.fill(kNoIndex);
        d_sq.fill(0.0);
    }

    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& m : members) t += m.size();
        return t;
    }
};

// Single pass: a point is stored (into its region) iff the farthest box
// corner is at least d_M_sq away; everything closer cannot belong to a pair
// beating the current estimate.
template <int Dim>
RegionPartition<Dim> partition_filter(const PointSet<Dim>& ps, const Box<Dim>& box,
                                      double d_M_sq) {
    RegionPartition<Dim> part;
    for (Index i = 0; i < ps.size(); ++i) {
        const RegionId r = region_of<Dim>(ps[i], box);
        const double cd = squared_distance<Dim>(ps[i], opposite_corner<Dim>(r, box));
        if (cd >= d_M_sq) {
            part.members[r.bits].push_back(i);
            if (part.xx[r.bits] == kNoIndex || cd > part.d_sq[r.bits]) {
                part.xx[r.bits] = i;
                part.d_sq[r.bits] = cd;
            }
        }
    }
    return part;
}

// Pairs of per-region farthest survivors; cheap chance to raise the estimate
// before the cross-region scans.
template <int Dim>
Estimate refresh_estimate(const RegionPartition<Dim>& part, const PointSet<Dim>& ps,
                          Estimate current, std::uint64_t* evals = nullptr) {
    constexpr unsigned R = region_count<Dim>();
    for (unsigned a = 0; a + 1 < R; ++a) {
        if (part.xx[a] == kNoIndex) continue;
        for (unsigned b = a + 1; b < R; ++b) {
            if (part.xx[b] == kNoIndex) continue;
            const double d = squared_distance<Dim>(ps[part.xx[a]], ps[part.xx[b]]);
            if (evals) ++*evals;
            if (current.pair.a == kNoIndex || d > current.d_sq) {
                current.d_sq = d;
                current.pair = {part.xx[a], part.xx[b]};
            }
        }
    }
    return current;
}

// Half-space separation for one region: the sphere of squared radius d_sq
// around the opposite corner crosses the Dim box edges incident to the
// region's own corner at one point each; survivors lie on the own-corner
// side of the hyperplane through those crossings. keep_all is the
// conservative fallback when the sphere misses an edge; when the sphere
// swallows the whole corner cell the plane test rejects everything and the
// quadratic backstop decides alone.
template <int Dim>
class ChordCut {
public:
    ChordCut(RegionId r, const Box<Dim>& box, double d_sq) {
        own_ = box.corner(static_cast<typename Box<Dim>::CornerType>(r.bits));
        const Point<Dim> opp = opposite_corner<Dim>(r, box);
        for (int j = 0; j < Dim; ++j) {
            double rest = 0.0;
            for (int m = 0; m < Dim; ++m) {
                if (m == j) continue;
                const double s = opp[m] - own_[m];
                rest += s * s;
            }
            const double s2 = d_sq - rest;
            if (s2 < 0.0) {  // sphere misses this edge entirely
                mode_ = Mode::keep_all;
                return;
            }
            const double side = std::abs(opp[j] - own_[j]);
            const double t = side - std::sqrt(s2);
            if (t <= 0.0) {  // crossing at or beyond the own corner
                mode_ = Mode::beyond;
                return;
            }
            coef_[j] = (opp[j] >= own_[j] ? 1.0 : -1.0) / t;
        }
        mode_ = Mode::chord;
    }

    bool keep_all() const { return mode_ == Mode::keep_all; }

    // Own-corner side of the hyperplane, boundary inclusive.
    bool keeps(const Point<Dim>& p) const {
        if (mode_ != Mode::chord) return false;
        double s = 0.0;
        for (int j = 0; j < Dim; ++j) s += coef_[j] * (p[j] - own_[j]);
        return s <= 1.0;
    }

private:
    enum class Mode { keep_all, chord, beyond };
    Mode mode_ = Mode::keep_all;
    Point<Dim> own_;
    Point<Dim> coef_;
};

namespace detail {

template <int Dim>
void refresh_region_max(RegionPartition<Dim>& part, unsigned r, const PointSet<Dim>& ps,
                        const Box<Dim>& box) {
    part.xx[r] = kNoIndex;
    part.d_sq[r] = 0.0;
    for (Index i : part.members[r]) {
        const double cd = corner_distance_sq<Dim>(ps[i], box);
        if (part.xx[r] == kNoIndex || cd > part.d_sq[r]) {
            part.xx[r] = i;
            part.d_sq[r] = cd;
        }
    }
}

}  // namespace detail

// Shrinks one region in place against a (typically raised) estimate. The
// circular predicate keeps p iff its farthest corner is still >= d_M_sq
// away. The linear_chord predicate applies the half-space test first and
// confirms every would-be discard with the circular test, so its survivor
// set always contains the circular survivor set.
template <int Dim>
void reduce(RegionPartition<Dim>& part, RegionId region, const PointSet<Dim>& ps,
            const Box<Dim>& box, double d_M_sq, const PruneConfig& cfg,
            Stats* stats = nullptr) {
    auto& mem = part.members[region.bits];
    const std::size_t before = mem.size();
    if (cfg.predicate == FilterPredicate::circular) {
        std::erase_if(mem, [&](Index i) {
            return corner_distance_sq<Dim>(ps[i], box) < d_M_sq;
        });
    } else {
        const ChordCut<Dim> cut(region, box, d_M_sq);
        if (!cut.keep_all()) {
            std::erase_if(mem, [&](Index i) {
                if (cut.keeps(ps[i])) return false;
                return corner_distance_sq<Dim>(ps[i], box) < d_M_sq;
            });
        }
    }
    detail::refresh_region_max<Dim>(part, region.bits, ps, box);
    if (stats) stats->reduce_log.push_back({region.bits, before, mem.size()});
}

// Max over all cross pairs of two index lists. Empty input yields d_sq = 0
// with a sentinel pair.
template <int Dim>
Estimate cross_pair_max(const std::vector<Index>& a, const std::vector<Index>& b,
                        const PointSet<Dim>& ps, std::uint64_t* evals = nullptr) {
    Estimate best;
    for (Index i : a)
        for (Index j : b) {
            const double d = squared_distance<Dim>(ps[i], ps[j]);
            if (best.pair.a == kNoIndex || d > best.d_sq) {
                best.d_sq = d;
                best.pair = {i, j};
            }
        }
    if (evals) *evals += static_cast<std::uint64_t>(a.size()) * b.size();
    return best;
}

// Diagonally opposite region pairs, lowest bits first: E2 (00,11),(01,10);
// E3 (000,111),(001,110),(010,101),(011,100).
template <int Dim>
std::vector<std::pair<RegionId, RegionId>> opposite_region_pairs() {
    constexpr unsigned R = region_count<Dim>();
    const unsigned mask = R - 1u;
    std::vector<std::pair<RegionId, RegionId>> out;
    for (unsigned r = 0; r < R; ++r) {
        const unsigned o = r ^ mask;
        if (r < o) out.push_back({RegionId{r}, RegionId{o}});
    }
    return out;
}

// Remaining region pairs with their squared bounds, widest bound first (ties
// broken by ascending bit pattern), so the scans most likely to raise the
// estimate run before the gated ones.
template <int Dim>
std::vector<std::tuple<RegionId, RegionId, double>> neighbor_region_pairs(const Box<Dim>& box) {
    constexpr unsigned R = region_count<Dim>();
    const unsigned mask = R - 1u;
    std::vector<std::tuple<RegionId, RegionId, double>> out;
    for (unsigned r = 0; r < R; ++r)
        for (unsigned s = r + 1; s < R; ++s) {
            if ((r ^ s) == mask) continue;
            out.push_back({RegionId{r}, RegionId{s},
                           region_pair_bound_sq<Dim>(RegionId{r}, RegionId{s}, box)});
        }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (std::get<2>(x) != std::get<2>(y)) return std::get<2>(x) > std::get<2>(y);
        if (std::get<0>(x).bits != std::get<0>(y).bits)
            return std::get<0>(x).bits < std::get<0>(y).bits;
        return std::get<1>(x).bits < std::get<1>(y).bits;
    });
    return out;
}

// Full pruning pipeline: bounding box, seed estimate from extreme points,
// one filtered partition pass over all points, then reduce + cross scans
// over region pairs, opposite pairs first. The estimate only ever moves to
// realized point-pair distances, so the result matches the exhaustive scan
// bitwise.
template <int Dim>
DiameterResult max_distance(const PointSet<Dim>& ps, const PruneConfig& cfg = {}) {
    static_assert(Dim == 2 || Dim == 3);
    const std::size_t n = ps.size();
    if (n < 2) throw std::invalid_argument("need at least two points");
    for (const auto& p : ps)
        if (!p.allFinite()) throw std::invalid_argument("non-finite input");

    DiameterResult res;
    Stats& st = res.stats;
    const Box<Dim> box = compute_bbox<Dim>(ps);
    if ((box.min().array() == box.max().array()).all()) {
        res.pair = {0, 1};
        return res;
    }

    const ExtremeSet<Dim> ex = collect_extremes<Dim>(ps, box);
    Estimate est = initial_estimate<Dim>(ex, ps, cfg.counters ? &st.seed_evals : nullptr);

    RegionPartition<Dim> part = partition_filter<Dim>(ps, box, est.d_sq);
    st.survivors = part.total();

    est = refresh_estimate<Dim>(part, ps, est, cfg.counters ? &st.refresh_evals : nullptr);

    Stats* stp = cfg.counters ? &st : nullptr;
    for (const auto& [ra, rb] : opposite_region_pairs<Dim>()) {
        reduce<Dim>(part, ra, ps, box, est.d_sq, cfg, stp);
        reduce<Dim>(part, rb, ps, box, est.d_sq, cfg, stp);
        const Estimate c = cross_pair_max<Dim>(part.members[ra.bits], part.members[rb.bits],
                                               ps, cfg.counters ? &st.diagonal_evals : nullptr);
        if (c.pair.a != kNoIndex && c.d_sq > est.d_sq) est = c;
        st.diagonal_stage_ran = true;
    }

    if (cfg.neighbor_stage) {
        for (const auto& [ra, rb, bound_sq] : neighbor_region_pairs<Dim>(box)) {
            if (est.d_sq > bound_sq) {
                ++st.neighbor_pairs_skipped;
                if (cfg.counters) st.skip_log.push_back({ra.bits, rb.bits, est.d_sq});
                continue;
            }
            reduce<Dim>(part, ra, ps, box, est.d_sq, cfg, stp);
            reduce<Dim>(part, rb, ps, box, est.d_sq, cfg, stp);
            const Estimate c = cross_pair_max<Dim>(part.members[ra.bits], part.members[rb.bits],
                                                   ps, cfg.counters ? &st.neighbor_evals : nullptr);
            if (c.pair.a != kNoIndex && c.d_sq > est.d_sq) est = c;
            ++st.neighbor_pairs_tested;
            st.neighbor_stage_ran = true;
        }
    }

    st.distance_evals = st.seed_evals + st.refresh_evals + st.diagonal_evals + st.neighbor_evals;
    res.dist_sq = est.d_sq;
    res.dist = std::sqrt(est.d_sq);
    res.pair = est.pair;
    return res;
}

}  // namespace maxdist
