#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "maxdist/geom.hpp"

namespace maxdist {

enum class Distribution { uniform, gaussian, clusters, circle, collinear, duplicated };

std::string to_string(Distribution d);
Distribution distribution_from_string(const std::string& name);
const std::vector<Distribution>& all_distributions();

struct GenSpec {
    Distribution dist = Distribution::uniform;
    std::size_t n = 0;
    int dim = 2;
    std::uint64_t seed = 0;
    double aspect = 1.0;        // box is aspect x 1 (x 1)
    double sigma = 0.1;         // gaussian / cluster spread
    std::size_t clusters = 4;   // cluster count
    double jitter = 0.0;        // radial jitter on the circle
    double radius = 1.0;        // circle radius
};

std::string to_string(const GenSpec& spec);

namespace detail {

inline void validate(const GenSpec& spec) {
    if (spec.dim != 2 && spec.dim != 3) throw std::invalid_argument("dim must be 2 or 3");
    if (!(spec.aspect >= 1.0) || !std::isfinite(spec.aspect))
        throw std::invalid_argument("aspect must be >= 1");
    if (!(spec.sigma >= 0.0) || !std::isfinite(spec.sigma))
        throw std::invalid_argument("sigma must be non-negative");
    if (!(spec.jitter >= 0.0) || !std::isfinite(spec.jitter))
        throw std::invalid_argument("jitter must be non-negative");
    if (!(spec.radius >= 0.0) || !std::isfinite(spec.radius))
        throw std::invalid_argument("radius must be non-negative");
    if (spec.dist == Distribution::clusters && spec.clusters == 0 && spec.n > 0)
        throw std::invalid_argument("cluster count must be positive");
}

}  // namespace detail

// Deterministic for a fixed GenSpec (including seed) within one build; draws
// are point-major, axis-minor, so the coordinate stream is stable.
template <int Dim>
PointSet<Dim> generate(const GenSpec& spec) {
    static_assert(Dim == 2 || Dim == 3);
    if (spec.dim != Dim) throw std::invalid_argument("dimension mismatch");
    detail::validate(spec);

    std::mt19937_64 rng(spec.seed);
    Point<Dim> hi = Point<Dim>::Ones();
    hi[0] = spec.aspect;

    PointSet<Dim> ps;
    ps.reserve(spec.n);
    switch (spec.dist) {
        case Distribution::uniform: {
            std::uniform_real_distribution<double> u01(0.0, 1.0);
            for (std::size_t i = 0; i < spec.n; ++i) {
                Point<Dim> p;
                for (int j = 0; j < Dim; ++j) p[j] = hi[j] * u01(rng);
                ps.push_back(p);
            }
            break;
        }
        case Distribution::gaussian: {
            // Unclipped; the diameter algorithms compute their own AABB.
            std::normal_distribution<double> g(0.0, spec.sigma > 0.0 ? spec.sigma : 1.0);
            const Point<Dim> center = 0.5 * hi;
            for (std::size_t i = 0; i < spec.n; ++i) {
                Point<Dim> p;
                for (int j = 0; j < Dim; ++j)
                    p[j] = center[j] + (spec.sigma > 0.0 ? g(rng) : 0.0);
                ps.push_back(p);
            }
            break;
        }
        case Distribution::clusters: {
            std::uniform_real_distribution<double> u01(0.0, 1.0);
            PointSet<Dim> centers;
            for (std::size_t c = 0; c < spec.clusters; ++c) {
                Point<Dim> p;
                for (int j = 0; j < Dim; ++j) p[j] = hi[j] * u01(rng);
                centers.push_back(p);
            }
            std::uniform_int_distribution<std::size_t> pick(0, spec.clusters - 1);
            std::normal_distribution<double> g(0.0, spec.sigma > 0.0 ? spec.sigma : 1.0);
            for (std::size_t i = 0; i < spec.n; ++i) {
                const Point<Dim>& c = centers[pick(rng)];
                Point<Dim> p;
                for (int j = 0; j < Dim; ++j)
                    p[j] = c[j] + (spec.sigma > 0.0 ? g(rng) : 0.0);
                ps.push_back(p);
            }
            break;
        }
        case Distribution::circle: {
            // Planar even in E3: the degenerate-axis case is one of the
            // adversarial inputs this generator exists for.
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            for (std::size_t i = 0; i < spec.n; ++i) {
                const double theta =
                    2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(spec.n);
                const double r = spec.radius + spec.jitter * u(rng);
                Point<Dim> p = Point<Dim>::Zero();
                p[0] = r * std::cos(theta);
                p[1] = r * std::sin(theta);
                ps.push_back(p);
            }
            break;
        }
        case Distribution::collinear: {
            for (std::size_t i = 0; i < spec.n; ++i) {
                const double t =
                    spec.n > 1 ? static_cast<double>(i) / static_cast<double>(spec.n - 1) : 0.0;
                ps.push_back(t * hi);
            }
            break;
        }
        case Distribution::duplicated: {
            std::uniform_real_distribution<double> u01(0.0, 1.0);
            while (ps.size() < spec.n) {
                Point<Dim> p;
                for (int j = 0; j < Dim; ++j) p[j] = hi[j] * u01(rng);
                ps.push_back(p);
                if (ps.size() < spec.n) ps.push_back(p);
            }
            break;
        }
        default:
            throw std::invalid_argument("invalid distribution");
    }
    return ps;
}

}  // namespace maxdist
