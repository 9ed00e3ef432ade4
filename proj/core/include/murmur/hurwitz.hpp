#pragma once

#include <cstdint>
#include <vector>

#include "murmur/rational.hpp"

namespace murmur {

/// Hurwitz class numbers H(n) for 0 <= n < limit, stored in twelfths.
/// H(n) = 0 for n = 1,2 mod 4; H(0) = -1/12; all denominators divide 12.
struct HurwitzTable {
    int64_t limit = 0;
    std::vector<int32_t> twelfths;  // 12*H(n)

    Rational value(int64_t n) const { return Rational(twelfths.at(static_cast<std::size_t>(n)), 12); }
    double value_d(int64_t n) const { return twelfths[static_cast<std::size_t>(n)] / 12.0; }
};

/// Reduced-form count with the usual 1/2 and 1/3 boundary weights.
HurwitzTable hurwitz_class_numbers(int64_t limit);

}  // namespace murmur
