#include "murmur/conductor_density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "murmur/complex_fn.hpp"
#include "murmur/quadrature.hpp"

namespace murmur {

namespace {

// beta-measure of {beta in [-1,1] : 27 beta^2 > -lambda/16 - 4 alpha^3}
inline double beta_measure(double alpha, double lambda) {
    const double g = (-lambda / 16.0 - 4.0 * alpha * alpha * alpha) / 27.0;
    if (g <= 0.0) return 2.0;
    if (g >= 1.0) return 0.0;
    return 2.0 * (1.0 - std::sqrt(g));
}

}  // namespace

double F_delta(double lambda) {
    if (lambda >= 496.0) return 1.0;
    if (lambda <= -496.0) return 0.0;
    // g decreases in alpha; below alpha1 no beta qualifies, above alpha0 all do
    const double alpha0 = std::cbrt(-lambda / 64.0);
    const double alpha1 = std::cbrt((-lambda / 16.0 - 27.0) / 4.0);
    const double lo = std::clamp(alpha1, -1.0, 1.0);
    const double hi = std::clamp(alpha0, -1.0, 1.0);
    double integral = 2.0 * (1.0 - hi);  // full-measure region
    if (hi > lo) {
        if (alpha0 <= 1.0) {
            // sqrt(g) vanishes like sqrt(alpha0 - alpha); substitute
            // alpha = alpha0 - v^2 to smooth the endpoint
            const double vmax = std::sqrt(alpha0 - lo);
            integral += adaptive_simpson(
                [&](double v) { return 2.0 * v * beta_measure(alpha0 - v * v, lambda); },
                0.0, vmax, 1e-11);
        } else {
            integral += adaptive_simpson(
                [&](double a) { return beta_measure(a, lambda); }, lo, hi, 1e-11);
        }
    }
    return 0.25 * integral;
}

Rational rho(int64_t p, int64_t m) {
    if (m < 1) throw std::invalid_argument("rho: m >= 1");
    int n = 0;
    while (m % p == 0) { m /= p; ++n; }
    if (p == 2) {
        if (n == 0) return {1, 2};
        if (n <= 2) return {1, 4};
        return {0, 1};
    }
    if (p == 3) return n == 0 ? Rational{1, 1} : Rational{0, 1};
    // p >= 5
    auto pw = [&](int e) {
        int64_t v = 1;
        for (int i = 0; i < e; ++i) v *= p;
        return v;
    };
    const Rational one_minus{p - 1, p};  // 1 - 1/p
    switch (n) {
        case 0: return Rational{pw(2) - 1, pw(2)};
        case 1: return Rational{1, pw(2)} * one_minus;
        case 2: return Rational{1, pw(3)} * one_minus;
        case 3: return Rational{1, pw(4)} * one_minus * one_minus;
        case 4: return Rational{1, pw(5)} * one_minus * Rational{2 * p - 1, p};
        case 5: return Rational{1, pw(6)} * one_minus * Rational{2 * p - 2, p};
        case 6: return Rational{1, pw(7)} * one_minus * Rational{3 * p - 2, p};
        case 7: return Rational{1, pw(8)} * one_minus * Rational{3 * p - 2, p};
        case 8: return Rational{1, pw(9)} * one_minus * Rational{3 * p - 2, p};
        default: {
            Rational r{1, pw(10)};
            for (int i = 10; i < n + 1; ++i) r = r * Rational{1, p};
            return r * one_minus * Rational{2 * p - 2, p};
        }
    }
}

Rational rho_row_sum(int64_t p) {
    if (p == 2) return {1, 1};
    if (p == 3) return {1, 1};
    Rational s{0, 1};
    int64_t pn = 1;
    for (int n = 0; n <= 8; ++n) {
        s = s + rho(p, pn);
        pn *= p;
    }
    // geometric tail over n >= 9: 2 (1 - 1/p) p^{-10}
    int64_t p10 = 1;
    for (int i = 0; i < 10; ++i) p10 *= p;
    s = s + Rational{2 * (p - 1), p} * Rational{1, p10};
    return s;
}

namespace {

// linear-interpolation table for G(x) = F_delta(x) - F_delta(-x)
class GTable {
public:
    GTable() {
        fine_.resize(kFineN + 1);
        for (int i = 0; i <= kFineN; ++i) {
            const double x = kFineMax * i / kFineN;
            fine_[static_cast<std::size_t>(i)] = F_delta(x) - F_delta(-x);
        }
        coarse_.resize(kCoarseN + 1);
        for (int i = 0; i <= kCoarseN; ++i) {
            const double x = kFineMax + (496.0 - kFineMax) * i / kCoarseN;
            coarse_[static_cast<std::size_t>(i)] = F_delta(x) - F_delta(-x);
        }
    }
    double operator()(double x) const {
        if (x <= 0.0) return 0.0;
        if (x >= 496.0) return 1.0;
        if (x <= kFineMax) {
            const double u = x / kFineMax * kFineN;
            const int i = std::min(static_cast<int>(u), kFineN - 1);
            const double f = u - i;
            return fine_[static_cast<std::size_t>(i)] * (1.0 - f) +
                   fine_[static_cast<std::size_t>(i + 1)] * f;
        }
        const double u = (x - kFineMax) / (496.0 - kFineMax) * kCoarseN;
        const int i = std::min(static_cast<int>(u), kCoarseN - 1);
        const double f = u - i;
        return coarse_[static_cast<std::size_t>(i)] * (1.0 - f) +
               coarse_[static_cast<std::size_t>(i + 1)] * f;
    }

private:
    static constexpr int kFineN = 4096;
    static constexpr int kCoarseN = 8192;
    static constexpr double kFineMax = 2.0;
    std::vector<double> fine_;
    std::vector<double> coarse_;
};

// multiplicative weights w(m) = rho(2,m) rho(3,m) prod_{p>=5, p|m} rho(p,m)/(1-1/p^2)
std::vector<double> build_weights(int64_t m_max) {
    std::vector<int32_t> spf(static_cast<std::size_t>(m_max) + 1, 0);
    for (int64_t i = 2; i <= m_max; ++i) {
        if (spf[static_cast<std::size_t>(i)] != 0) continue;
        for (int64_t j = i; j <= m_max; j += i)
            if (spf[static_cast<std::size_t>(j)] == 0)
                spf[static_cast<std::size_t>(j)] = static_cast<int32_t>(i);
    }
    std::vector<double> w(static_cast<std::size_t>(m_max) + 1, 0.0);
    const double w2_0 = 0.5, w3_0 = 1.0;
    for (int64_t m = 1; m <= m_max; ++m) {
        double v = w2_0 * w3_0;
        int64_t rest = m;
        bool zero = false;
        while (rest > 1) {
            const int64_t p = spf[static_cast<std::size_t>(rest)];
            int n = 0;
            while (rest % p == 0) { rest /= p; ++n; }
            if (p == 2) {
                if (n > 2) { zero = true; break; }
                v *= (1.0 / 4.0) / w2_0;
            } else if (p == 3) {
                zero = true;
                break;
            } else {
                const double pd = static_cast<double>(p);
                const double corr = 1.0 - 1.0 / (pd * pd);
                v *= rho(p, m).to_double() / corr;
            }
        }
        w[static_cast<std::size_t>(m)] = zero ? 0.0 : v;
    }
    return w;
}

}  // namespace

ConductorDensity F_N_build(std::span<const double> lambda_grid, int64_t m_cutoff) {
    if (lambda_grid.empty()) throw std::invalid_argument("F_N_build: empty grid");
    for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
        if (!(lambda_grid[i] > 0.0)) throw std::invalid_argument("F_N_build: grid must be positive");
        if (i > 0 && !(lambda_grid[i] > lambda_grid[i - 1]))
            throw std::invalid_argument("F_N_build: grid must be increasing");
    }
    if (m_cutoff < 1) throw std::invalid_argument("F_N_build: m_cutoff >= 1");

    static const GTable G;
    // prefactor zeta^{(6)}(10)/zeta^{(6)}(2); with it the total weight mass is 1
    const double z2 = zeta(Complex(2.0, 0.0)).real() * (1.0 - std::pow(2.0, -2.0)) *
                      (1.0 - std::pow(3.0, -2.0));
    const double z10 = zeta(Complex(10.0, 0.0)).real() * (1.0 - std::pow(2.0, -10.0)) *
                       (1.0 - std::pow(3.0, -10.0));
    const double pref = z10 / z2;
    const double W_tot = 1.0 / pref;

    const double lambda_min = lambda_grid.front();
    const int64_t m_needed =
        std::min<int64_t>(m_cutoff, static_cast<int64_t>(std::ceil(496.0 / lambda_min)) + 1);
    const auto w = build_weights(m_needed);
    std::vector<double> W_prefix(w.size());
    double run = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        run += w[i];
        W_prefix[i] = run;
    }

    ConductorDensity d;
    d.lambda_grid.assign(lambda_grid.begin(), lambda_grid.end());
    d.m_cutoff = m_cutoff;
    d.lambda_floor = lambda_grid.front();
    d.F_N_values.reserve(lambda_grid.size());
    for (double lam : lambda_grid) {
        const int64_t M0 = static_cast<int64_t>(std::ceil(496.0 / lam));
        const int64_t M = std::min<int64_t>(m_cutoff, M0);
        double acc = 0.0;
        for (int64_t m = 1; m <= std::min<int64_t>(M, m_needed); ++m)
            if (w[static_cast<std::size_t>(m)] != 0.0)
                acc += w[static_cast<std::size_t>(m)] * G(static_cast<double>(m) * lam);
        if (M0 <= m_cutoff) {
            // every m > M0 has G = 1 exactly; add the closed tail mass
            const double W_M = M0 <= m_needed ? W_prefix[static_cast<std::size_t>(
                                                    std::min<int64_t>(M0, m_needed))]
                                              : W_tot;
            acc += W_tot - W_M;
        }
        d.F_N_values.push_back(pref * acc);
    }
    d.residual_mass = 1.0 - d.F_N_values.back();

    // F_N' by central differences, one-sided at the ends
    const std::size_t n = d.lambda_grid.size();
    d.F_N_prime.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i == 0 ? 0 : i - 1;
        const std::size_t hi = i + 1 == n ? i : i + 1;
        d.F_N_prime[i] = (d.F_N_values[hi] - d.F_N_values[lo]) /
                         (d.lambda_grid[hi] - d.lambda_grid[lo]);
    }
    return d;
}

std::vector<double> default_lambda_grid(int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    const double lo = std::log(1e-3), hi = std::log(60.0);
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] =
            std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    return g;
}

ConductorDensity point_mass_density(double lambda0) {
    if (!(lambda0 > 0.0)) throw std::invalid_argument("point_mass_density: lambda0 > 0");
    ConductorDensity d;
    d.lambda_grid = {lambda0};
    d.F_N_values = {1.0};
    d.F_N_prime = {1.0};  // unit mass, consumed by the one-point outer rule
    d.lambda_floor = lambda0;
    return d;
}

ConductorDensity empirical_conductor_density(std::span<const double> lambdas,
                                             std::span<const double> grid) {
    if (lambdas.empty()) throw std::invalid_argument("empirical_conductor_density: empty");
    std::vector<double> sorted(lambdas.begin(), lambdas.end());
    std::sort(sorted.begin(), sorted.end());
    ConductorDensity d;
    d.lambda_grid.assign(grid.begin(), grid.end());
    d.F_N_values.reserve(grid.size());
    for (double lam : grid) {
        const auto it = std::upper_bound(sorted.begin(), sorted.end(), lam);
        d.F_N_values.push_back(static_cast<double>(it - sorted.begin()) /
                               static_cast<double>(sorted.size()));
    }
    const std::size_t n = d.lambda_grid.size();
    d.F_N_prime.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i == 0 ? 0 : i - 1;
        const std::size_t hi = i + 1 == n ? i : i + 1;
        d.F_N_prime[i] = (d.F_N_values[hi] - d.F_N_values[lo]) /
                         (d.lambda_grid[hi] - d.lambda_grid[lo]);
    }
    d.residual_mass = 1.0 - d.F_N_values.back();
    return d;
}

}  // namespace murmur
