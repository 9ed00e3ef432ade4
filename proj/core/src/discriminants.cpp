#include "murmur/discriminants.hpp"

#include <cmath>
#include <stdexcept>

#include "murmur/factor.hpp"

namespace murmur {

namespace {

// squarefree flags for the closed interval [lo, hi]
std::vector<bool> squarefree_interval(int64_t lo, int64_t hi) {
    std::vector<bool> sf(static_cast<std::size_t>(hi - lo + 1), true);
    for (int64_t p = 2; p * p <= hi; ++p) {
        const int64_t q = p * p;
        int64_t start = ((lo + q - 1) / q) * q;
        for (int64_t v = start; v <= hi; v += q)
            sf[static_cast<std::size_t>(v - lo)] = false;
    }
    return sf;
}

}  // namespace

bool is_fundamental_discriminant(int64_t d) {
    if (d <= 1) return false;
    if (d % 4 == 1) return is_squarefree(d);
    if (d % 4 == 0) {
        const int64_t m = d / 4;
        const int64_t r = m % 4;
        return (r == 2 || r == 3) && is_squarefree(m);
    }
    return false;
}

DiscriminantFamily enumerate_discriminants(int64_t d_lo, int64_t d_hi) {
    if (d_lo < 1 || d_lo >= d_hi)
        throw std::invalid_argument("enumerate_discriminants: require 1 <= d_lo < d_hi");
    DiscriminantFamily fam;
    fam.d_lo = d_lo;
    fam.d_hi = d_hi;
    const int64_t lo = d_lo + 1, hi = d_hi - 1;
    if (lo > hi) return fam;
    const auto sf = squarefree_interval(lo, hi);
    const int64_t mlo = (lo + 3) / 4, mhi = hi / 4;
    const auto sfm = mlo <= mhi ? squarefree_interval(mlo, mhi) : std::vector<bool>{};
    for (int64_t d = lo; d <= hi; ++d) {
        if (d == 1) continue;
        if (d % 4 == 1) {
            if (sf[static_cast<std::size_t>(d - lo)]) fam.members.push_back(d);
        } else if (d % 4 == 0) {
            const int64_t m = d / 4;
            const int64_t r = m % 4;
            if ((r == 2 || r == 3) && sfm[static_cast<std::size_t>(m - mlo)])
                fam.members.push_back(d);
        }
    }
    return fam;
}

std::vector<int64_t> enumerate_odd_squarefree(int64_t limit) {
    if (limit < 1) throw std::invalid_argument("enumerate_odd_squarefree: limit must be >= 1");
    std::vector<int64_t> out;
    if (limit == 1) return out;
    const auto sf = squarefree_interval(1, limit - 1);
    for (int64_t n = 1; n < limit; n += 2)
        if (sf[static_cast<std::size_t>(n - 1)]) out.push_back(n);
    return out;
}

}  // namespace murmur
