#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace murmur {

/// Complete factorization of |n| as increasing (prime, exponent) pairs.
struct Factorization {
    std::vector<std::pair<int64_t, int>> pairs;

    int64_t value() const;  // product of p^e
    int exponent_of(int64_t p) const;
};

/// Deterministic factorization: trial division below 1e6, then
/// Miller-Rabin + Brent's rho with a fixed parameter sequence.
/// Rejects n = 0.
Factorization factorize(int64_t n);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(int64_t n);

bool is_squarefree(int64_t n);

}  // namespace murmur
