#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "murmur/contour.hpp"
#include "murmur/discriminants.hpp"
#include "murmur/primes.hpp"
#include "murmur/weights.hpp"

namespace murmur {

/// One murmuration curve: abscissae with empirical, predicted, ramified
/// correction and difference values. All value columns are normalized by
/// 1/sqrt(X); difference = empirical - predicted (the correction is kept
/// as its own column rather than folded in).
struct MurmurationCurve {
    std::vector<double> abscissae;   // X values
    std::vector<double> y_values;    // X / D for the family scale D
    std::vector<double> empirical;
    std::vector<double> predicted;
    std::vector<double> correction;
    std::vector<double> difference;
    std::string error_budget;  // the uninstantiated O(.) envelope
};

/// Prime window [X, X + X^delta).
struct WindowSpec {
    double X = 0.0;
    double delta = 0.7;

    void validate() const;  // 1/2 < delta < 1, X > 0
};

/// (1/#F) sum_d sum_{p^k < X} chi_d(p)^k log p, odd k only when flagged,
/// all k otherwise. Unnormalized (no 1/sqrt(X)).
double empirical_char_sum(const DiscriminantFamily& family, double X, bool odd_k_only,
                          const PrimeTable& table);
double empirical_char_sum(const DiscriminantFamily& family, double X, bool odd_k_only);

/// sum_{p^k < X, k even} #{d in F : p | d}/#F * log p.
double ramified_correction(const DiscriminantFamily& family, double X,
                           const PrimeTable& table);
double ramified_correction(const DiscriminantFamily& family, double X);

/// Ratios-conjecture main term
///   X^{1/2}/(2 pi i) int (pi^2/6) G((1-s)/2)/G(s/2) z(2-2s)/z(3-2s)
///                        (1/#F) sum_d (pi X / d)^{s-1/2} ds/s
/// over the truncated contour. With normalized = true the leading X^{1/2}
/// is dropped. The d-span overload accepts arbitrary positive scales.
double predicted_char_main_term(std::span<const double> d_values, double X,
                                const ContourSpec& contour, bool normalized);
double predicted_char_main_term(const DiscriminantFamily& family, double X,
                                const ContourSpec& contour, bool normalized = false);

/// Assembles empirical/predicted/correction/difference on an increasing grid.
MurmurationCurve char_murmuration_curve(const DiscriminantFamily& family,
                                        std::span<const double> X_grid,
                                        const ContourSpec& contour, bool odd_k_only);

/// Both sides of the identity evaluated at X + X^delta minus at X
/// (unnormalized). Returns {empirical difference, predicted difference}.
std::pair<double, double> windowed_difference(const DiscriminantFamily& family,
                                              const WindowSpec& window,
                                              const ContourSpec& contour, bool odd_k_only);

/// Weighted Jacobi-symbol family average:
///   sum_{n odd squarefree} (1/N) f(n/N) (1/sqrt X) sum_{p^k < X} chi_n(p^k) log p,
/// n truncated where f(n/N) < 1e-12 of its running maximum.
double cech_empirical(int64_t N, double X, const WeightFunction& w);

/// Prediction side: contour term with the (pi y)^{s-1/2}/4 kernel against
/// fhat(3/2-s) (G-even + G-odd) z(2-2s)/z^{(2)}(3-2s), plus the secondary
/// prime-sum term (1/sqrt(Ny)) sum_{p^k < sqrt(Ny)} 2 fhat(1)/(3 z(2)) log p.
double cech_predicted(int64_t N, double y, const ContourSpec& contour,
                      const WeightFunction& w);

/// |LHS - RHS| of the explicit formula at X with contour height T:
///   sum_{p^k < X} chi_d(p^k) log p  vs
///   -(1/2 pi i) int L'/L(s, chi_d) X^s ds/s on [0.6 - iT, 0.6 + iT],
/// trapezoid rule with at least 1e4 points.
double explicit_formula_residual(int64_t d, double X, double T);

/// Default X grid reproducing the published configuration: n equally spaced
/// points on [1e4, 1e6].
std::vector<double> default_char_grid(int n = 600);

}  // namespace murmur
