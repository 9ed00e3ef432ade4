#include "murmur/ec_sums.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "murmur/parallel.hpp"
#include "murmur/primes.hpp"

namespace murmur {

ApMatrix build_ap_matrix(std::span<const CurveEntry> curves, int64_t limit) {
    ApMatrix m;
    const auto table = sieve_primes(limit);
    m.primes = table.primes;
    m.rows.assign(curves.size(), std::vector<int32_t>(table.size(), 0));

    const int64_t np = static_cast<int64_t>(table.size());
    parallel_reduce_chunks<int>(
        np,
        [&](int64_t lo, int64_t hi) {
            std::vector<int8_t> chi;
            std::unordered_map<uint64_t, int32_t> memo;
            for (int64_t j = lo; j < hi; ++j) {
                const int64_t p = table.primes[static_cast<std::size_t>(j)];
                if (p > 3) build_legendre_table(p, chi);
                memo.clear();
                const bool use_memo =
                    p > 3 && static_cast<int64_t>(curves.size()) > 2 * p;
                for (std::size_t i = 0; i < curves.size(); ++i) {
                    const auto& e = curves[i];
                    int32_t ap;
                    if (e.conductor % p == 0) {
                        const auto it = e.ap_cache.find(p);
                        ap = it != e.ap_cache.end() ? it->second : 0;
                    } else if (p <= 3) {
                        ap = static_cast<int32_t>(e.ap(p));
                    } else if (use_memo) {
                        const uint64_t key =
                            static_cast<uint64_t>(((e.a % p) + p) % p) * static_cast<uint64_t>(p) +
                            static_cast<uint64_t>(((e.b % p) + p) % p);
                        const auto it = memo.find(key);
                        if (it != memo.end()) {
                            ap = it->second;
                        } else {
                            ap = static_cast<int32_t>(ap_point_count(e.a, e.b, p, chi.data()));
                            memo.emplace(key, ap);
                        }
                    } else {
                        ap = static_cast<int32_t>(ap_point_count(e.a, e.b, p, chi.data()));
                    }
                    m.rows[i][static_cast<std::size_t>(j)] = ap;
                }
            }
            return 0;
        },
        [](int a, int) { return a; }, 0);
    return m;
}

double curve_trace_sum(const CurveEntry& entry, double X, const ApMatrix& aps,
                       std::size_t row) {
    double acc = 0.0;
    for (std::size_t j = 0; j < aps.primes.size(); ++j) {
        const int64_t p = aps.primes[j];
        const double pd = static_cast<double>(p);
        if (!(pd < X)) break;
        if (entry.conductor % p == 0) continue;  // good primes only
        const double logp = std::log(pd);
        const int64_t ap = aps.rows[row][j];
        int k = 1;
        for (double pw = pd; pw < X; pw *= pd, ++k)
            acc += ap_prime_power_sum(ap, p, k) * logp;
    }
    return acc / std::sqrt(X);
}

namespace {

double averaged_trace_sum(std::span<const CurveEntry> curves,
                          std::span<const std::size_t> idx, double X) {
    if (idx.empty()) throw std::invalid_argument("empirical_ec_sum: empty sign class");
    if (!(X > 2.0)) return 0.0;
    const ApMatrix aps = build_ap_matrix(curves, static_cast<int64_t>(std::ceil(X)) + 1);
    const int64_t n = static_cast<int64_t>(idx.size());
    const double total = parallel_reduce_chunks<double>(
        n,
        [&](int64_t lo, int64_t hi) {
            double acc = 0.0;
            for (int64_t i = lo; i < hi; ++i) {
                const std::size_t c = idx[static_cast<std::size_t>(i)];
                acc += curve_trace_sum(curves[c], X, aps, c);
            }
            return acc;
        },
        [](double a, double b) { return a + b; }, 0.0);
    return total / static_cast<double>(n);
}

}  // namespace

double empirical_ec_sum(const HeightFamily& family, int omega, double X) {
    if (omega != 1 && omega != -1)
        throw std::invalid_argument("empirical_ec_sum: omega must be +-1");
    if (family.plus_indices.empty() && family.minus_indices.empty())
        throw std::invalid_argument("empirical_ec_sum: signs not computed");
    const auto& idx = omega == 1 ? family.plus_indices : family.minus_indices;
    return averaged_trace_sum(family.entries, idx, X);
}

double empirical_ec_sum(std::span<const CurveEntry> curves, double X) {
    std::vector<std::size_t> idx(curves.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return averaged_trace_sum(curves, idx, X);
}

}  // namespace murmur
