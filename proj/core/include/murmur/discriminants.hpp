#pragma once

#include <cstdint>
#include <vector>

namespace murmur {

/// All fundamental discriminants d with d_lo < d < d_hi (positive convention).
struct DiscriminantFamily {
    int64_t d_lo = 0;  // exclusive
    int64_t d_hi = 0;  // exclusive
    std::vector<int64_t> members;

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
};

/// Positive-d convention: d = 1 mod 4 squarefree with d > 1, or d = 4m with
/// m = 2,3 mod 4 squarefree. d <= 1 is rejected.
bool is_fundamental_discriminant(int64_t d);

/// Sorted fundamental discriminants in the open interval (d_lo, d_hi).
/// Requires 1 <= d_lo < d_hi.
DiscriminantFamily enumerate_discriminants(int64_t d_lo, int64_t d_hi);

/// Odd squarefree n with 0 < n < limit, including n = 1.
std::vector<int64_t> enumerate_odd_squarefree(int64_t limit);

}  // namespace murmur
