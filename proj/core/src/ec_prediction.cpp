#include "murmur/ec_prediction.hpp"

#include <cmath>
#include <stdexcept>

#include "murmur/parallel.hpp"
#include "murmur/primes.hpp"

namespace murmur {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kFourPiSq = 4.0 * kPi * kPi;
}  // namespace

void MainTermSpec::validate() const {
    if (omega != 1 && omega != -1)
        throw std::invalid_argument("MainTermSpec: omega must be +-1");
    if (!(lambda_min > 0.0 && lambda_max > lambda_min))
        throw std::invalid_argument("MainTermSpec: need 0 < lambda_min < lambda_max");
    contour.validate(0.75);  // A(1/2-s, s-1/2) computable for eps < 1/4
    if (!(y > 0.0)) throw std::invalid_argument("MainTermSpec: y must be positive");
}

EcPredictionEngine::EcPredictionEngine(const ContourSpec& contour,
                                       const EulerProductConfig& cfg)
    : contour_(contour), cfg_(cfg), t_nodes_(contour.nodes()) {
    contour_.validate(0.75);
    const AEulerEngine A(cfg_);
    const int64_t n = contour_.n_points;
    weighted_kernel_.resize(static_cast<std::size_t>(n));
    const double c = contour_.c;
    parallel_reduce_chunks<int>(
        n,
        [&](int64_t lo, int64_t hi) {
            for (int64_t j = lo; j < hi; ++j) {
                const Complex s(c, t_nodes_[static_cast<std::size_t>(j)]);
                const Complex Aval =
                    A.evaluate(0.5 - s, s - 0.5, /*with_tail_correction=*/false).value;
                const Complex K = gamma_ratio_ec(s) * zeta(2.0 * s) * Aval / s;
                weighted_kernel_[static_cast<std::size_t>(j)] = contour_.weight(j) * K;
            }
            return 0;
        },
        [](int a, int) { return a; }, 0);
}

double EcPredictionEngine::integrate(std::span<const Complex> inner,
                                     double prefactor_sign) const {
    Complex sum(0.0, 0.0);
    for (std::size_t j = 0; j < inner.size(); ++j) sum += weighted_kernel_[j] * inner[j];
    sum *= prefactor_sign / (2.0 * kPi);
    if (std::abs(sum.imag()) > 1e-6 * std::max(1.0, std::abs(sum.real())))
        throw std::runtime_error("ec prediction: imaginary residue exceeds 1e-6");
    return sum.real();
}

double EcPredictionEngine::main_term(const MainTermSpec& spec,
                                     const ConductorDensity& density, double H) const {
    spec.validate();
    if (density.lambda_grid.empty())
        throw std::invalid_argument("ec main term: empty density");
    const bool point_mass = density.lambda_grid.size() == 1;
    if (!point_mass &&
        (density.lambda_grid.front() > spec.lambda_min ||
         density.lambda_grid.back() < spec.lambda_max))
        throw std::invalid_argument("ec main term: density does not cover the lambda range");

    const int64_t n = contour_.n_points;
    const double h = contour_.spacing();
    const double c = contour_.c;

    // inner[j] = int (4 pi^2 y / lambda)^{s_j - 1/2} F_N'(lambda) d lambda
    // (trapezoid over the grid restricted to [lambda_min, lambda_max])
    std::vector<Complex> inner(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    const auto& grid = density.lambda_grid;
    auto accumulate_lambda = [&](double lam, double mass) {
        const double base = kFourPiSq * spec.y / lam;
        const double logb = std::log(base);
        const double mag = std::exp((c - 0.5) * logb) * mass;
        Complex rot = mag * std::exp(Complex(0.0, t_nodes_[0] * logb));
        const Complex step = std::exp(Complex(0.0, h * logb));
        for (int64_t j = 0; j < n; ++j) {
            inner[static_cast<std::size_t>(j)] += rot;
            rot *= step;
        }
    };
    if (point_mass) {
        accumulate_lambda(grid[0], 1.0);
    } else {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (grid[i] < spec.lambda_min || grid[i] > spec.lambda_max) continue;
            const double left = i == 0 ? grid[i] : std::max(grid[i - 1], spec.lambda_min);
            const double right =
                i + 1 == grid.size() ? grid[i] : std::min(grid[i + 1], spec.lambda_max);
            const double wts = 0.5 * (right - left);
            if (wts <= 0.0) continue;
            accumulate_lambda(grid[i], wts * density.F_N_prime[i]);
        }
    }
    const double main = integrate(inner, static_cast<double>(spec.omega));
    const double X = H * spec.y;
    const double secondary = chebyshev_psi(std::sqrt(X)) / std::sqrt(X);
    return main - secondary;
}

double EcPredictionEngine::family_term(std::span<const CurveEntry> curves, int omega,
                                       double X) const {
    if (omega != 1 && omega != -1)
        throw std::invalid_argument("family_term: omega must be +-1");
    std::vector<double> conductors;
    for (const auto& e : curves) {
        if (e.conductor <= 0)
            throw std::invalid_argument("family_term: conductors not computed");
        if (e.root_number == 0)
            throw std::invalid_argument("family_term: root numbers not computed");
        if (e.root_number == omega) conductors.push_back(static_cast<double>(e.conductor));
    }
    if (conductors.empty()) throw std::invalid_argument("family_term: empty sign class");

    const int64_t n = contour_.n_points;
    const double h = contour_.spacing();
    const double c = contour_.c;
    struct VecPartial {
        std::vector<double> v;
    };
    auto chunk = [&](int64_t lo, int64_t hi) {
        VecPartial part;
        part.v.assign(static_cast<std::size_t>(2 * n), 0.0);
        for (int64_t i = lo; i < hi; ++i) {
            const double base = kFourPiSq * X / conductors[static_cast<std::size_t>(i)];
            const double logb = std::log(base);
            const double mag = std::exp((c - 0.5) * logb);
            Complex rot = mag * std::exp(Complex(0.0, t_nodes_[0] * logb));
            const Complex step = std::exp(Complex(0.0, h * logb));
            for (int64_t j = 0; j < n; ++j) {
                part.v[static_cast<std::size_t>(2 * j)] += rot.real();
                part.v[static_cast<std::size_t>(2 * j + 1)] += rot.imag();
                rot *= step;
            }
        }
        return part;
    };
    auto combine = [n](VecPartial a, const VecPartial& b) {
        if (a.v.empty()) a.v.assign(static_cast<std::size_t>(2 * n), 0.0);
        if (!b.v.empty())
            for (std::size_t j = 0; j < a.v.size(); ++j) a.v[j] += b.v[j];
        return a;
    };
    const VecPartial fam = parallel_reduce_chunks<VecPartial>(
        static_cast<int64_t>(conductors.size()), chunk, combine, VecPartial{});
    std::vector<Complex> inner(static_cast<std::size_t>(n));
    const double invF = 1.0 / static_cast<double>(conductors.size());
    for (int64_t j = 0; j < n; ++j)
        inner[static_cast<std::size_t>(j)] =
            Complex(fam.v[static_cast<std::size_t>(2 * j)] * invF,
                    fam.v[static_cast<std::size_t>(2 * j + 1)] * invF);
    const double main = integrate(inner, static_cast<double>(omega));
    const double secondary = chebyshev_psi(std::sqrt(X)) / std::sqrt(X);
    return main - secondary;
}

double predicted_ec_main_term(const MainTermSpec& spec, const ConductorDensity& density,
                              const EulerProductConfig& cfg, double H) {
    return EcPredictionEngine(spec.contour, cfg).main_term(spec, density, H);
}

double predicted_ec_family_term(const HeightFamily& family, int omega, double X,
                                const ContourSpec& contour, const EulerProductConfig& cfg) {
    return EcPredictionEngine(contour, cfg).family_term(family.entries, omega, X);
}

double conductor_window_prediction(const ConductorWindowFamily& window, double X,
                                   const ContourSpec& contour,
                                   const EulerProductConfig& cfg) {
    if (window.entries.empty())
        throw std::invalid_argument("conductor_window_prediction: empty window family");
    return EcPredictionEngine(contour, cfg).family_term(window.entries, window.omega, X);
}

}  // namespace murmur
