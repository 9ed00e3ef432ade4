#include "murmur/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "murmur/quadrature.hpp"

namespace murmur {

double WeightFunction::eval(double x) const {
    switch (kind) {
        case Kind::Exponential: return std::exp(-x);
        case Kind::Gaussian: return std::exp(-x * x);
        case Kind::Tabulated: {
            if (parameters.size() < 3)
                throw std::invalid_argument("WeightFunction: tabulated needs {x0, dx, y...}");
            const double x0 = parameters[0], dx = parameters[1];
            const std::size_t n = parameters.size() - 2;
            const double u = (x - x0) / dx;
            if (u < 0.0 || u > static_cast<double>(n - 1)) return 0.0;
            const std::size_t i = std::min(static_cast<std::size_t>(u), n - 2);
            const double frac = u - static_cast<double>(i);
            return parameters[2 + i] * (1.0 - frac) + parameters[3 + i] * frac;
        }
    }
    return 0.0;
}

Complex mellin(const WeightFunction& w, Complex s) {
    if (s.real() <= 0.0)
        throw std::domain_error("mellin: require Re(s) > 0");
    if (w.kind == WeightFunction::Kind::Exponential) return gamma_fn(s);

    // log substitution x = e^t makes the integrand smooth:
    //   int f(e^t) e^{s t} dt
    double t_lo, t_hi;
    if (w.kind == WeightFunction::Kind::Gaussian) {
        t_lo = -42.0 / s.real();  // e^{s t} below 1e-18 of scale
        t_hi = 3.3;               // e^{-e^{2t}} ~ 1e-320 there
    } else {
        const double x0 = w.parameters[0], dx = w.parameters[1];
        const double xmax = x0 + dx * static_cast<double>(w.parameters.size() - 3);
        const double xmin = std::max(x0, 1e-12);
        t_lo = std::log(xmin);
        t_hi = std::log(std::max(xmax, xmin * 2.0));
    }
    auto integrand = [&](double t) -> Complex {
        const double x = std::exp(t);
        return w.eval(x) * std::exp(s * t);
    };
    return adaptive_simpson(integrand, t_lo, t_hi, 1e-10);
}

}  // namespace murmur
