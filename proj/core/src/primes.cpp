#include "murmur/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace murmur {

PrimeTable sieve_primes(int64_t limit) {
    if (limit < 0) throw std::invalid_argument("sieve_primes: limit must be >= 0");
    PrimeTable t;
    t.limit = limit;
    if (limit <= 2) return t;

    // odds-only sieve; index i represents 2i+1
    const int64_t n = (limit - 1) / 2;  // odd numbers 1,3,...,< limit
    std::vector<bool> comp(static_cast<std::size_t>(n), false);
    comp[0] = true;  // 1 is not prime
    for (int64_t i = 1; (2 * i + 1) * (2 * i + 1) < limit; ++i) {
        if (comp[static_cast<std::size_t>(i)]) continue;
        const int64_t p = 2 * i + 1;
        for (int64_t j = (p * p - 1) / 2; j < n; j += p)
            comp[static_cast<std::size_t>(j)] = true;
    }
    t.primes.push_back(2);
    for (int64_t i = 1; i < n; ++i)
        if (!comp[static_cast<std::size_t>(i)]) t.primes.push_back(2 * i + 1);
    t.logs.reserve(t.primes.size());
    for (int64_t p : t.primes) t.logs.push_back(std::log(static_cast<double>(p)));
    return t;
}

double chebyshev_psi(double X, const PrimeTable& table) {
    if (X < 0) throw std::invalid_argument("chebyshev_psi: X must be >= 0");
    if (X <= 2) return 0.0;
    if (static_cast<double>(table.limit) < X)
        throw std::invalid_argument("chebyshev_psi: prime table too small for X");
    double sum = 0.0;
    for (std::size_t i = 0; i < table.primes.size(); ++i) {
        const double p = static_cast<double>(table.primes[i]);
        if (!(p < X)) break;
        // count k >= 1 with p^k < X
        int k = 0;
        for (double pw = p; pw < X; pw *= p) ++k;
        sum += static_cast<double>(k) * table.logs[i];
    }
    return sum;
}

double chebyshev_psi(double X) {
    if (X <= 2) return 0.0;
    const auto table = sieve_primes(static_cast<int64_t>(std::ceil(X)) + 1);
    return chebyshev_psi(X, table);
}

}  // namespace murmur
