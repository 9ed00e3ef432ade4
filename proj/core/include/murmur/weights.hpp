#pragma once

#include <vector>

#include "murmur/complex_fn.hpp"

namespace murmur {

/// Smooth fast-decaying weight on (0, inf).
///  - exponential: f(x) = e^{-x}; Mellin transform Gamma(s) in closed form
///  - gaussian:    f(x) = e^{-x^2}
///  - tabulated:   linear interpolation of parameters = {x0, dx, y0, y1, ...},
///                 zero outside the grid
struct WeightFunction {
    enum class Kind { Exponential, Gaussian, Tabulated };
    Kind kind = Kind::Exponential;
    std::vector<double> parameters;

    static WeightFunction exponential() { return {Kind::Exponential, {}}; }
    static WeightFunction gaussian() { return {Kind::Gaussian, {}}; }
    static WeightFunction tabulated(std::vector<double> params) {
        return {Kind::Tabulated, std::move(params)};
    }

    double eval(double x) const;
};

/// Mellin transform f^(s) = int_0^inf f(x) x^{s-1} dx, Re(s) > 0.
/// Exponential kind is Gamma(s) exactly; others use adaptive quadrature to 1e-8.
Complex mellin(const WeightFunction& w, Complex s);

}  // namespace murmur
