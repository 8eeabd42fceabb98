#pragma once

#include <optional>

#include "maxdist/geom.hpp"

namespace maxdist {

struct BoundPair {
    double d1 = 0.0;  // threshold below which the worst-case segment analysis applies
    double d2 = 0.0;  // box diagonal
};

// Estimate-quality thresholds for an axis-aligned box:
// d1^2 = max_side^2 + min_side^2 / 2, d2^2 = sum of squared sides.
template <int Dim>
BoundPair table1_bounds(const Box<Dim>& box) {
    static_assert(Dim == 2 || Dim == 3);
    const Point<Dim> s = box.sizes();
    const double mx = s.maxCoeff();
    const double mn = s.minCoeff();
    BoundPair out;
    out.d1 = std::sqrt(mx * mx + 0.5 * mn * mn);
    out.d2 = std::sqrt(s.squaredNorm());
    return out;
}

// Area of the intersection of the four radius-a disks centered at the
// corners of an a x a square: a^2 (pi/3 - sqrt(3) + 1).
double omega0_area(double a);

// Fraction of a uniform square sample expected to survive a corner-distance
// filter with threshold equal to the side: q = sqrt(3) - pi/3.
double surviving_fraction_q();

// Speedup of one filtered quadratic pass over the plain quadratic scan when
// the filter keeps fraction q: 1/q^2.
double naive_speedup();

// Area of the circular segment that survives a half-space cut at estimate d
// on a k*b x b box: P = [k^2 b^2 + d^2 - b^2 - 2 k b sqrt(d^2 - b^2)] / 2.
double segment_area_P(double k, double b, double d);

// Worst-case predicted speedup v = k^2 / (4 [k^2 - 1 + d^2/b^2
// - 2 k sqrt(d^2/b^2 - 1)]^2); empty when the bracket vanishes (the
// estimate reaches the diagonal and the surviving area collapses).
std::optional<double> predicted_speedup_v(double k, double b, double d);

}  // namespace maxdist
