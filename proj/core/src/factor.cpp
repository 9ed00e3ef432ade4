#include "murmur/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace murmur {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n, u64 a) {
    if (n % a == 0) return n == a;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's cycle-finding rho with fixed increment c; deterministic.
u64 pollard_brent(u64 n, u64 c) {
    u64 x = 2, y = 2, d = 1, q = 1, ys = 0;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        u64 k = 0;
        while (k < r && d == 1) {
            ys = y;
            for (u64 i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            d = std::gcd(q, n);
            k += m;
        }
        r <<= 1;
    }
    if (d == n) {
        do {
            ys = f(ys);
            d = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (d == 1);
    }
    return d;
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (murmur::is_prime(static_cast<int64_t>(n))) {
        out.push_back(n);
        return;
    }
    for (u64 c = 1;; ++c) {
        const u64 d = pollard_brent(n, c);
        if (d != n && d != 1) {
            factor_rec(d, out);
            factor_rec(n / d, out);
            return;
        }
    }
}

}  // namespace

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // deterministic base set for 64-bit integers
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (!miller_rabin(static_cast<u64>(n), a)) return false;
    return true;
}

Factorization factorize(int64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
    u64 m = static_cast<u64>(n < 0 ? -(n + 1) + 1 : n);  // |n|, safe at INT64_MIN
    Factorization f;
    if (m == 1) return f;

    std::vector<u64> primes;
    for (u64 p : {2ULL, 3ULL, 5ULL}) {
        while (m % p == 0) { m /= p; primes.push_back(p); }
    }
    static constexpr int kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    u64 p = 7;
    int w = 0;
    while (p < 1000000 && p * p <= m) {
        while (m % p == 0) { m /= p; primes.push_back(p); }
        p += kWheel[w];
        w = (w + 1) & 7;
    }
    if (m > 1) {
        if (m < 1000000ULL * 1000000ULL && p * p > m)
            primes.push_back(m);
        else
            factor_rec(m, primes);
    }
    std::sort(primes.begin(), primes.end());
    for (u64 q : primes) {
        if (!f.pairs.empty() && f.pairs.back().first == static_cast<int64_t>(q))
            ++f.pairs.back().second;
        else
            f.pairs.emplace_back(static_cast<int64_t>(q), 1);
    }
    return f;
}

int64_t Factorization::value() const {
    int64_t v = 1;
    for (const auto& [p, e] : pairs)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

int Factorization::exponent_of(int64_t p) const {
    for (const auto& [q, e] : pairs)
        if (q == p) return e;
    return 0;
}

bool is_squarefree(int64_t n) {
    if (n == 0) return false;
    const auto f = factorize(n);
    for (const auto& [p, e] : f.pairs)
        if (e > 1) return false;
    return true;
}

}  // namespace murmur
