#include "maxdist/reference.hpp"

#include <algorithm>
#include <numeric>

namespace maxdist {

namespace {

double cross(const Point<2>& o, const Point<2>& a, const Point<2>& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Shared tail of the two hull baselines: short-circuit the degenerate hulls.
bool hull_trivial(const std::vector<Index>& hull, const PointSet<2>& ps, DiameterResult& res) {
    res.stats.hull_size = hull.size();
    res.stats.survivors = hull.size();
    if (hull.size() == 1) {  // every input point coincides
        res.pair = {0, 1};
        res.dist_sq = 0.0;
        res.dist = 0.0;
        return true;
    }
    if (hull.size() == 2) {
        res.pair = {std::min(hull[0], hull[1]), std::max(hull[0], hull[1])};
        res.dist_sq = squared_distance<2>(ps[hull[0]], ps[hull[1]]);
        res.dist = std::sqrt(res.dist_sq);
        res.stats.distance_evals = 1;
        return true;
    }
    return false;
}

}  // namespace

// Andrew's monotone chain with strict turns, so collinear interior points and
// duplicates never become vertices.
std::vector<Index> convex_hull_2d(const PointSet<2>& ps) {
    if (ps.empty()) throw std::invalid_argument("empty input");
    std::vector<Index> idx(ps.size());
    std::iota(idx.begin(), idx.end(), Index{0});
    std::sort(idx.begin(), idx.end(), [&](Index a, Index b) {
        if (ps[a].x() != ps[b].x()) return ps[a].x() < ps[b].x();
        if (ps[a].y() != ps[b].y()) return ps[a].y() < ps[b].y();
        return a < b;
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](Index a, Index b) {
                              return ps[a].x() == ps[b].x() && ps[a].y() == ps[b].y();
                          }),
              idx.end());
    const std::size_t m = idx.size();
    if (m <= 2) return idx;

    std::vector<Index> h(2 * m);
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i) {  // lower chain
        while (k >= 2 && cross(ps[h[k - 2]], ps[h[k - 1]], ps[idx[i]]) <= 0.0) --k;
        h[k++] = idx[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = m - 1; i-- > 0;) {  // upper chain
        while (k >= lower && cross(ps[h[k - 2]], ps[h[k - 1]], ps[idx[i]]) <= 0.0) --k;
        h[k++] = idx[i];
    }
    h.resize(k - 1);  // the chains share both endpoints
    return h;
}

DiameterResult hull_diameter_bf(const PointSet<2>& ps) {
    if (ps.size() < 2) throw std::invalid_argument("need at least two points");
    const std::vector<Index> hull = convex_hull_2d(ps);
    DiameterResult res;
    if (hull_trivial(hull, ps, res)) return res;

    const std::size_t h = hull.size();
    double best = -1.0;
    IndexPair pair;
    for (std::size_t i = 0; i + 1 < h; ++i)
        for (std::size_t j = i + 1; j < h; ++j) {
            const double d = squared_distance<2>(ps[hull[i]], ps[hull[j]]);
            if (d > best) {
                best = d;
                pair = {std::min(hull[i], hull[j]), std::max(hull[i], hull[j])};
            }
        }
    res.dist_sq = best;
    res.dist = std::sqrt(best);
    res.pair = pair;
    res.stats.distance_evals = static_cast<std::uint64_t>(h) * (h - 1) / 2;
    return res;
}

DiameterResult hull_diameter_calipers(const PointSet<2>& ps) {
    if (ps.size() < 2) throw std::invalid_argument("need at least two points");
    const std::vector<Index> hull = convex_hull_2d(ps);
    DiameterResult res;
    if (hull_trivial(hull, ps, res)) return res;

    const std::size_t h = hull.size();
    double best = -1.0;
    IndexPair pair;
    std::uint64_t evals = 0;
    auto consider = [&](std::size_t u, std::size_t v) {
        const double d = squared_distance<2>(ps[hull[u]], ps[hull[v]]);
        ++evals;
        if (d > best) {
            best = d;
            pair = {std::min(hull[u], hull[v]), std::max(hull[u], hull[v])};
        }
    };
    // Rotating calipers: for each edge advance the opposite vertex while the
    // supporting triangle grows, probing both endpoints on both sides so
    // parallel-edge ties stay covered.
    std::size_t j = 1;
    for (std::size_t i = 0; i < h; ++i) {
        const std::size_t ni = (i + 1) % h;
        while (cross(ps[hull[i]], ps[hull[ni]], ps[hull[(j + 1) % h]]) >
               cross(ps[hull[i]], ps[hull[ni]], ps[hull[j]]))
            j = (j + 1) % h;
        consider(i, j);
        consider(ni, j);
        consider(i, (j + 1) % h);
        consider(ni, (j + 1) % h);
    }
    res.dist_sq = best;
    res.dist = std::sqrt(best);
    res.pair = pair;
    res.stats.distance_evals = evals;
    return res;
}

}  // namespace maxdist
