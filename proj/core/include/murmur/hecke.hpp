#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "murmur/hurwitz.hpp"

namespace murmur {

/// dim S_k(SL_2(Z)) for even k >= 0.
int dim_cusp_forms_level1(int k);

/// Trace of T_p on level-1 weight-k cusp forms (k even, p prime), by the
/// Eichler-Selberg formula over Hurwitz class numbers H(4p - t^2).
int64_t hecke_trace(int k, int64_t p);
int64_t hecke_trace(int k, int64_t p, const HurwitzTable& hw);

/// Tr_k(p) / p^{(k-1)/2}, evaluated through the bounded Chebyshev-type
/// recurrence (stable for large k*log p where the integer trace overflows).
double hecke_trace_normalized(int k, int64_t p, const HurwitzTable& hw);

/// Normalized traces tr[k][p] for the A(alpha, gamma) tail: weights
/// k = 2m+2 for m in [5, m_max], all primes 3 < p < p_limit.
struct TraceTable {
    int m_max = 30;
    std::vector<int64_t> primes;                 // p > 3
    std::vector<std::vector<double>> values;     // values[i][m-5] = tr_{2m+2}(p_i)/p^{m+1/2}

    std::map<std::pair<int, int64_t>, int64_t> exact;  // optional exact entries
};

TraceTable build_trace_table(int64_t p_limit, int m_max);

}  // namespace murmur
