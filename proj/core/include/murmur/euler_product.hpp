#pragma once

#include <cstdint>
#include <memory>

#include "murmur/complex_fn.hpp"
#include "murmur/hecke.hpp"
#include "murmur/primes.hpp"

namespace murmur {

/// Truncation configuration for the ratios-conjecture Euler product.
/// (a2, a3) are the reference-curve coefficients entering the p = 2, 3
/// factors; they depend on the family residues (r, t).
struct EulerProductConfig {
    int64_t P_max = 10000;
    int M_max = 30;
    double tol = 1e-8;
    int a2 = 0;
    int a3 = 0;

    void validate() const;
};

/// a_p(E_{r,t}) for p = 2, 3 as a function of the family residues.
std::pair<int, int> reference_curve_coefficients(int64_t r, int64_t t);

struct AEulerResult {
    Complex value;
    double truncation_error;  // estimated magnitude of dropped tail terms
};

/// Shared per-config state (prime table, normalized Hecke traces).
class AEulerEngine {
public:
    explicit AEulerEngine(const EulerProductConfig& cfg);

    /// A(alpha, gamma): zeta(1+alpha+gamma)/zeta(1+2 gamma) times the local
    /// corrections, evaluated as an absolutely convergent paired product over
    /// p <= P_max with a prime-zeta tail correction. Holomorphic on
    /// Re(alpha), Re(gamma) > -1/4 (region checked). The tail correction can
    /// be skipped in bulk contour evaluation where O(1/(P_max log P_max))
    /// accuracy suffices.
    AEulerResult evaluate(Complex alpha, Complex gamma,
                          bool with_tail_correction = true) const;

    /// d/d alpha A(alpha, gamma) at alpha = gamma = r, central difference
    /// with one Richardson step.
    Complex alpha_derivative_diag(Complex r) const;

    const EulerProductConfig& config() const { return cfg_; }

private:
    EulerProductConfig cfg_;
    std::vector<int64_t> primes_;  // 3 < p <= P_max
    TraceTable traces_;
};

/// One-shot convenience wrappers.
AEulerResult A_euler(Complex alpha, Complex gamma, const EulerProductConfig& cfg);
Complex A_alpha_diag(Complex r, const EulerProductConfig& cfg);

/// Prime zeta P(s) = sum_p p^{-s}, Re(s) > 1.
Complex prime_zeta(Complex s);

}  // namespace murmur
