#include "maxdist/datagen.hpp"

#include <cstdio>

namespace maxdist {

std::string to_string(Distribution d) {
    switch (d) {
        case Distribution::uniform: return "uniform";
        case Distribution::gaussian: return "gaussian";
        case Distribution::clusters: return "clusters";
        case Distribution::circle: return "circle";
        case Distribution::collinear: return "collinear";
        case Distribution::duplicated: return "duplicated";
    }
    throw std::invalid_argument("invalid distribution");
}

Distribution distribution_from_string(const std::string& name) {
    for (Distribution d : all_distributions())
        if (to_string(d) == name) return d;
    throw std::invalid_argument("unknown distribution: " + name);
}

const std::vector<Distribution>& all_distributions() {
    static const std::vector<Distribution> all = {
        Distribution::uniform,   Distribution::gaussian,  Distribution::clusters,
        Distribution::circle,    Distribution::collinear, Distribution::duplicated,
    };
    return all;
}

std::string to_string(const GenSpec& spec) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "dist=%s n=%zu dim=%d seed=%llu aspect=%.17g sigma=%.17g clusters=%zu "
                  "jitter=%.17g radius=%.17g",
                  to_string(spec.dist).c_str(), spec.n, spec.dim,
                  static_cast<unsigned long long>(spec.seed), spec.aspect, spec.sigma,
                  spec.clusters, spec.jitter, spec.radius);
    return buf;
}

}  // namespace maxdist
