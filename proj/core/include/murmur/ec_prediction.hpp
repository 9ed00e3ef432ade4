#pragma once

#include <cstdint>
#include <span>

#include "murmur/conductor_density.hpp"
#include "murmur/contour.hpp"
#include "murmur/ec_family.hpp"
#include "murmur/euler_product.hpp"

namespace murmur {

/// Parameters of the distributional main term.
struct MainTermSpec {
    double y = 1.0;   // X / H
    ContourSpec contour;
    int omega = 1;
    double lambda_min = 1e-3;
    double lambda_max = 60.0;

    void validate() const;  // 0 < eps < 1/4 computable region, omega = +-1
};

/// Shared contour kernel G(3/2-s)/G(1/2+s) zeta(2s) A(1/2-s, s-1/2) / s.
class EcPredictionEngine {
public:
    EcPredictionEngine(const ContourSpec& contour, const EulerProductConfig& cfg);

    /// Distributional form: omega/(2 pi i) double quadrature of the kernel
    /// against (4 pi^2 y / lambda)^{s-1/2} F_N'(lambda) d lambda, minus the
    /// prime-sum secondary term at X = H y. Normalized (the 1/sqrt(Hy) form).
    double main_term(const MainTermSpec& spec, const ConductorDensity& density,
                     double H) const;

    /// Finite-family form at X: the lambda-integral is replaced by the
    /// average of (4 pi^2 X/N_E)^{s-1/2} over curves of the requested sign.
    double family_term(std::span<const CurveEntry> curves, int omega, double X) const;

    const ContourSpec& contour() const { return contour_; }

private:
    ContourSpec contour_;
    EulerProductConfig cfg_;
    std::vector<double> t_nodes_;
    std::vector<Complex> weighted_kernel_;  // w_j K(s_j)

    double integrate(std::span<const Complex> inner, double prefactor_sign) const;
};

double predicted_ec_main_term(const MainTermSpec& spec, const ConductorDensity& density,
                              const EulerProductConfig& cfg, double H);

double predicted_ec_family_term(const HeightFamily& family, int omega, double X,
                                const ContourSpec& contour, const EulerProductConfig& cfg);

double conductor_window_prediction(const ConductorWindowFamily& window, double X,
                                   const ContourSpec& contour,
                                   const EulerProductConfig& cfg);

}  // namespace murmur
