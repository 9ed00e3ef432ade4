#pragma once

// Test-side oracles, independent of the library implementation paths they
// check: trial-division prime counting, quadratic-residue tables, reduced
// binary quadratic form enumeration, q-expansion Hecke eigencoefficients.

#include <cstdint>
#include <map>
#include <vector>

namespace oracles {

inline bool trial_division_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline int64_t count_primes_below(int64_t limit) {
    int64_t c = 0;
    for (int64_t n = 2; n < limit; ++n)
        if (trial_division_prime(n)) ++c;
    return c;
}

/// (d/q) for odd prime q not dividing d, by exhaustive square enumeration.
inline int legendre_by_squares(int64_t d, int64_t q) {
    int64_t r = ((d % q) + q) % q;
    for (int64_t x = 1; x < q; ++x)
        if ((x * x) % q == r) return 1;
    return -1;
}

/// 12*H(n) by direct reduced-form enumeration, loop structure independent
/// of the library (b-first with divisor scan).
inline int hurwitz_twelfths(int64_t n) {
    if (n == 0) return -1;
    if (n % 4 == 1 || n % 4 == 2) return 0;
    int acc = 0;
    for (int64_t b = n & 1; b * b <= n; b += 2) {
        if ((b * b + n) % 4 != 0) continue;
        const int64_t m = (b * b + n) / 4;
        for (int64_t a = std::max<int64_t>(b, 1); a * a <= m; ++a) {
            if (m % a != 0) continue;
            const int64_t c = m / a;
            if (a == b && b == c)
                acc += 4;
            else if (b == 0 && a == c)
                acc += 6;
            else if (b == 0 || b == a || a == c)
                acc += 12;
            else
                acc += 24;
        }
    }
    return acc;
}

/// q-expansions up to degree `n_max` of the normalized eigenforms of level 1
/// and weight 12..22 (coefficients of Delta, Delta*E4, Delta*E6, Delta*E4^2,
/// Delta*E4*E6).
std::vector<int64_t> delta_q_expansion(int n_max);
std::vector<int64_t> eigenform_q_expansion(int weight, int n_max);

}  // namespace oracles
