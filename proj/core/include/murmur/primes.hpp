#pragma once

#include <cstdint>
#include <vector>

namespace murmur {

/// Primes below a fixed limit together with their natural logarithms.
/// Immutable after construction; safe to share across threads.
struct PrimeTable {
    int64_t limit = 0;
    std::vector<int64_t> primes;
    std::vector<double> logs;  // logs[i] = ln(primes[i])

    std::size_t size() const { return primes.size(); }
};

/// Eratosthenes sieve: exactly the primes p < limit.
PrimeTable sieve_primes(int64_t limit);

/// Chebyshev psi: sum of log p over prime powers p^k < X (strict).
/// Empty sum for X <= 2.
double chebyshev_psi(double X, const PrimeTable& table);

/// Convenience overload that sieves internally.
double chebyshev_psi(double X);

}  // namespace murmur
