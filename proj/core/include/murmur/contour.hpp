#pragma once

#include <cstdint>
#include <vector>

#include "murmur/complex_fn.hpp"

namespace murmur {

enum class ContourRule { MidpointRiemann, Trapezoid };

/// Truncated vertical segment [c - iT, c + iT] with a fixed quadrature rule.
/// Node/weight pairs are chosen so that
///   (1/2*pi*i) int f(s) ds  ~=  (1/2*pi) sum_j weight(j) f(c + i t_j).
struct ContourSpec {
    double c = 0.6;
    double T = 100.0;
    int64_t n_points = 10000;
    ContourRule rule = ContourRule::MidpointRiemann;

    /// Fail-fast bounds check; c must lie in (0.5, c_max), T > 2, n_points >= 2.
    void validate(double c_max) const;

    std::vector<double> nodes() const;
    double spacing() const;
    double weight(int64_t j) const;
};

}  // namespace murmur
