#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "murmur/rational.hpp"

namespace murmur {

/// Area fraction of the unit box [-1,1]^2 with -16(4 alpha^3 + 27 beta^2)
/// below lambda; saturates to 0/1 outside |lambda| <= 496.
double F_delta(double lambda);

/// Density weight rho(p, m), keyed on the exact power of p dividing m.
Rational rho(int64_t p, int64_t m);

/// sum_{n >= 0} rho(p, p^n) with the closed-form geometric tail; equals
/// 1 - p^{-10} for p >= 5 and 1 for p in {2, 3}.
Rational rho_row_sum(int64_t p);

/// Tabulated limiting conductor distribution F_N and derivative on a grid.
struct ConductorDensity {
    std::vector<double> lambda_grid;
    std::vector<double> F_N_values;
    std::vector<double> F_N_prime;
    int64_t m_cutoff = 0;
    double lambda_floor = 0.0;   // configured lambda_0
    double residual_mass = 0.0;  // F_N mass beyond the truncation
    bool lambda_floor_warning = false;  // set by callers checking 4464/log H

    double max_lambda() const { return lambda_grid.empty() ? 0.0 : lambda_grid.back(); }
};

/// F_N(lambda) = zeta^{(6)}(10)/zeta^{(6)}(2) sum_m (F_delta(m lambda) -
/// F_delta(-m lambda)) rho(2,m) rho(3,m) prod_{p>=5, p|m} rho(p,m)/(1-p^{-2}),
/// truncated at m_cutoff with the saturated tail summed in closed form.
ConductorDensity F_N_build(std::span<const double> lambda_grid, int64_t m_cutoff);

/// Default log-spaced grid on [1e-3, 60].
std::vector<double> default_lambda_grid(int n = 160);

/// Point mass at lambda0 (single-point density for the degenerate outer rule).
ConductorDensity point_mass_density(double lambda0);

/// Empirical CDF of N_E/H over a curve set, tabulated on the given grid.
ConductorDensity empirical_conductor_density(std::span<const double> lambdas,
                                             std::span<const double> grid);

}  // namespace murmur
