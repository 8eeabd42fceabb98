#pragma once

#include <cmath>
#include <stdexcept>

#include "maxdist/geom.hpp"
#include "maxdist/result.hpp"

namespace maxdist {

// Exhaustive O(n^2) scan; the ground-truth oracle for everything else.
// Reports the first maximizing pair in i<j scan order.
template <int Dim>
DiameterResult brute_force_diameter(const PointSet<Dim>& ps) {
    const std::size_t n = ps.size();
    if (n < 2) throw std::invalid_argument("need at least two points");
    double best = -1.0;
    IndexPair pair;
    for (Index i = 0; i + 1 < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            const double d = squared_distance<Dim>(ps[i], ps[j]);
            if (d > best) {
                best = d;
                pair = {i, j};
            }
        }
    DiameterResult res;
    res.dist_sq = best;
    res.dist = std::sqrt(best);
    res.pair = pair;
    res.stats.distance_evals = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    return res;
}

// Strictly convex hull (collinear interior points dropped), indices in
// counter-clockwise order starting from the lexicographically smallest point.
std::vector<Index> convex_hull_2d(const PointSet<2>& ps);

// Hull first, then exhaustive scan over hull vertices only.
DiameterResult hull_diameter_bf(const PointSet<2>& ps);

// Hull first, then rotating calipers over antipodal vertex pairs.
DiameterResult hull_diameter_calipers(const PointSet<2>& ps);

}  // namespace maxdist
