#include "murmur/contour.hpp"

#include <stdexcept>
#include <string>

namespace murmur {

void ContourSpec::validate(double c_max) const {
    if (!(c > 0.5))
        throw std::invalid_argument("ContourSpec: abscissa must satisfy c > 1/2, got c = " +
                                    std::to_string(c));
    if (!(c < c_max))
        throw std::invalid_argument("ContourSpec: abscissa must satisfy c < " +
                                    std::to_string(c_max) + ", got c = " + std::to_string(c));
    if (!(T > 2.0))
        throw std::invalid_argument("ContourSpec: require T > 2, got T = " + std::to_string(T));
    if (n_points < 2)
        throw std::invalid_argument("ContourSpec: require n_points >= 2");
    if (c - 0.5 < 1e-6)
        throw std::invalid_argument("ContourSpec: contour within 1e-6 of the pole at s = 1/2");
}

double ContourSpec::spacing() const {
    return rule == ContourRule::MidpointRiemann
               ? 2.0 * T / static_cast<double>(n_points)
               : 2.0 * T / static_cast<double>(n_points - 1);
}

std::vector<double> ContourSpec::nodes() const {
    std::vector<double> t(static_cast<std::size_t>(n_points));
    const double h = spacing();
    for (int64_t j = 0; j < n_points; ++j)
        t[static_cast<std::size_t>(j)] =
            rule == ContourRule::MidpointRiemann
                ? -T + (static_cast<double>(j) + 0.5) * h
                : -T + static_cast<double>(j) * h;
    return t;
}

double ContourSpec::weight(int64_t j) const {
    const double h = spacing();
    if (rule == ContourRule::Trapezoid && (j == 0 || j == n_points - 1)) return 0.5 * h;
    return h;
}

}  // namespace murmur
