#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace maxdist {

using Index = std::size_t;
inline constexpr Index kNoIndex = static_cast<Index>(-1);

template <int Dim>
using Point = Eigen::Matrix<double, Dim, 1>;

template <int Dim>
using PointSet = std::vector<Point<Dim>>;

template <int Dim>
using Box = Eigen::AlignedBox<double, Dim>;

// Orthant index relative to the box center: bit j is set iff coordinate j lies
// in the upper half (>= center, ties go up).
struct RegionId {
    unsigned bits = 0;
    friend bool operator==(RegionId a, RegionId b) { return a.bits == b.bits; }
    friend bool operator!=(RegionId a, RegionId b) { return a.bits != b.bits; }
};

template <int Dim>
constexpr unsigned region_count() {
    return 1u << Dim;
}

// All pairwise squared distances in the toolkit flow through this one
// function so that dominance arguments (corner bound >= realized pair) hold
// bitwise, not just in real arithmetic.
template <int Dim>
inline double squared_distance(const Point<Dim>& p, const Point<Dim>& q) {
    const Point<Dim> d = p - q;
    return d.squaredNorm();
}

template <int Dim>
Box<Dim> compute_bbox(const PointSet<Dim>& ps) {
    if (ps.empty()) throw std::invalid_argument("empty input");
    Box<Dim> box(ps.front());
    for (const auto& p : ps) box.extend(p);
    return box;
}

template <int Dim>
inline RegionId region_of(const Point<Dim>& p, const Box<Dim>& box) {
    const Point<Dim> c = box.center();
    unsigned bits = 0;
    for (int j = 0; j < Dim; ++j)
        if (p[j] >= c[j]) bits |= 1u << j;
    return RegionId{bits};
}

// Corner of the box diagonally opposite region r; bit j of a corner index
// selects the max coordinate on axis j, matching the RegionId convention.
template <int Dim>
inline Point<Dim> opposite_corner(RegionId r, const Box<Dim>& box) {
    const unsigned mask = region_count<Dim>() - 1u;
    return box.corner(static_cast<typename Box<Dim>::CornerType>(r.bits ^ mask));
}

// Farthest any point of the box can be from p (squared). Equals the squared
// distance to the corner opposite p's own region, which dominates the
// distance from p to every point of the box.
template <int Dim>
inline double corner_distance_sq(const Point<Dim>& p, const Box<Dim>& box) {
    return squared_distance<Dim>(p, opposite_corner<Dim>(region_of<Dim>(p, box), box));
}

// Upper bound (squared) on the distance between any point of region ri and
// any point of region rj: full side on axes where the region bits differ,
// the wider half on axes where they agree. The half extents come from the
// actual floating center so the bound dominates every realizable coordinate
// difference slot by slot.
template <int Dim>
double region_pair_bound_sq(RegionId ri, RegionId rj, const Box<Dim>& box) {
    if (ri == rj) throw std::invalid_argument("same region");
    const Point<Dim> c = box.center();
    Point<Dim> e;
    for (int j = 0; j < Dim; ++j) {
        if (((ri.bits ^ rj.bits) >> j) & 1u)
            e[j] = box.max()[j] - box.min()[j];
        else
            e[j] = std::max(c[j] - box.min()[j], box.max()[j] - c[j]);
    }
    return e.squaredNorm();
}

template <int Dim>
double region_pair_bound(RegionId ri, RegionId rj, const Box<Dim>& box) {
    return std::sqrt(region_pair_bound_sq<Dim>(ri, rj, box));
}

}  // namespace maxdist
