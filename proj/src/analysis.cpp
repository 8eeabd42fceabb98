#include "maxdist/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace maxdist {

double omega0_area(double a) {
    if (a < 0.0) throw std::invalid_argument("negative side");
    return a * a * (std::numbers::pi / 3.0 - std::numbers::sqrt3 + 1.0);
}

double surviving_fraction_q() {
    return std::numbers::sqrt3 - std::numbers::pi / 3.0;
}

double naive_speedup() {
    const double q = surviving_fraction_q();
    return 1.0 / (q * q);
}

double segment_area_P(double k, double b, double d) {
    if (d < b) throw std::invalid_argument("d below box height");
    return 0.5 * (k * k * b * b + d * d - b * b - 2.0 * k * b * std::sqrt(d * d - b * b));
}

std::optional<double> predicted_speedup_v(double k, double b, double d) {
    if (d < b) throw std::invalid_argument("d below box height");
    const double r = (d * d) / (b * b);
    const double bracket = k * k - 1.0 + r - 2.0 * k * std::sqrt(r - 1.0);
    if (bracket <= 0.0) return std::nullopt;
    return k * k / (4.0 * bracket * bracket);
}

}  // namespace maxdist
