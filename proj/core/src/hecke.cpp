#include "murmur/hecke.hpp"

#include <cmath>
#include <stdexcept>

#include "murmur/parallel.hpp"
#include "murmur/primes.hpp"

namespace murmur {

int dim_cusp_forms_level1(int k) {
    if (k < 0 || (k & 1)) return 0;
    if (k < 12) return 0;
    return k / 12 - (k % 12 == 2 ? 1 : 0);
}

int64_t hecke_trace(int k, int64_t p, const HurwitzTable& hw) {
    if (k < 2 || (k & 1)) throw std::invalid_argument("hecke_trace: k must be even, >= 2");
    if (k == 2) return 0;  // S_2(1) = 0; the k = 2 formula carries an extra term
    if (4 * p >= hw.limit) throw std::invalid_argument("hecke_trace: Hurwitz table too small");

    // 24*Tr = -sum_{t^2 < 4p} P_k(t,p) * 12H(4p-t^2) - 24,
    // P_k(t,p) = w_{k-1} with w_j = t w_{j-1} - p w_{j-2}
    __int128 acc = 0;
    const int64_t tmax = static_cast<int64_t>(std::sqrt(static_cast<double>(4 * p)));
    for (int64_t t = -tmax; t <= tmax; ++t) {
        const int64_t n = 4 * p - t * t;
        if (n <= 0) continue;  // t^2 = 4p cannot happen for prime p
        __int128 w_prev = 0, w = 1;
        for (int j = 2; j <= k - 1; ++j) {
            const __int128 w_next = t * w - p * w_prev;
            w_prev = w;
            w = w_next;
        }
        acc += w * hw.twelfths[static_cast<std::size_t>(n)];
    }
    const __int128 tr24 = -acc - 24;
    if (tr24 % 24 != 0) throw std::logic_error("hecke_trace: non-integral trace");
    const __int128 tr = tr24 / 24;
    if (tr > INT64_MAX || tr < INT64_MIN) throw std::overflow_error("hecke_trace: overflow");
    return static_cast<int64_t>(tr);
}

int64_t hecke_trace(int k, int64_t p) {
    const auto hw = hurwitz_class_numbers(4 * p + 1);
    return hecke_trace(k, p, hw);
}

double hecke_trace_normalized(int k, int64_t p, const HurwitzTable& hw) {
    if (k < 2 || (k & 1)) throw std::invalid_argument("hecke_trace_normalized: bad weight");
    if (k == 2) return 0.0;
    const double sq = std::sqrt(static_cast<double>(p));
    double acc = 0.0;
    const int64_t tmax = static_cast<int64_t>(std::sqrt(static_cast<double>(4 * p)));
    for (int64_t t = -tmax; t <= tmax; ++t) {
        const int64_t n = 4 * p - t * t;
        if (n <= 0) continue;
        // u_j = w_j / p^{(j-1)/2} obeys u_j = (t/sqrt p) u_{j-1} - u_{j-2};
        // stays bounded by j
        const double x = static_cast<double>(t) / sq;
        double u_prev = 0.0, u = 1.0;
        for (int j = 2; j <= k - 1; ++j) {
            const double u_next = x * u - u_prev;
            u_prev = u;
            u = u_next;
        }
        acc += u * hw.value_d(n);
    }
    return -0.5 * acc / sq - std::pow(static_cast<double>(p), -(k - 1) / 2.0);
}

TraceTable build_trace_table(int64_t p_limit, int m_max) {
    TraceTable t;
    t.m_max = m_max;
    const auto primes = sieve_primes(p_limit);
    for (int64_t p : primes.primes)
        if (p > 3) t.primes.push_back(p);
    t.values.assign(t.primes.size(), {});
    const auto hw = hurwitz_class_numbers(4 * (p_limit + 1) + 1);
    parallel_reduce_chunks<int>(
        static_cast<int64_t>(t.primes.size()),
        [&](int64_t lo, int64_t hi) {
            for (int64_t i = lo; i < hi; ++i) {
                const int64_t p = t.primes[static_cast<std::size_t>(i)];
                auto& row = t.values[static_cast<std::size_t>(i)];
                row.resize(static_cast<std::size_t>(m_max - 4));
                // one bounded recurrence pass per t, collecting all weights
                const double sq = std::sqrt(static_cast<double>(p));
                const int64_t tmax = static_cast<int64_t>(std::sqrt(static_cast<double>(4 * p)));
                std::vector<double> acc(static_cast<std::size_t>(m_max - 4), 0.0);
                for (int64_t tt = -tmax; tt <= tmax; ++tt) {
                    const int64_t n = 4 * p - tt * tt;
                    if (n <= 0) continue;
                    const double H = hw.value_d(n);
                    const double x = static_cast<double>(tt) / sq;
                    double u_prev = 0.0, u = 1.0;
                    // need u_{k-1} = u_{2m+1} for m in [5, m_max]
                    for (int j = 2; j <= 2 * m_max + 1; ++j) {
                        const double u_next = x * u - u_prev;
                        u_prev = u;
                        u = u_next;
                        if (j >= 11 && (j & 1)) {
                            const int m = (j - 1) / 2;
                            if (m >= 5) acc[static_cast<std::size_t>(m - 5)] += u * H;
                        }
                    }
                }
                for (int m = 5; m <= m_max; ++m) {
                    const double norm = std::pow(static_cast<double>(p), m + 0.5);
                    row[static_cast<std::size_t>(m - 5)] =
                        -0.5 * acc[static_cast<std::size_t>(m - 5)] / sq - 1.0 / norm;
                }
            }
            return 0;
        },
        [](int a, int) { return a; }, 0);
    return t;
}

}  // namespace murmur
