#pragma once

#include <cstdint>

namespace murmur {

/// Kronecker symbol (d/n), the completely multiplicative extension of the
/// Legendre symbol to all integer pairs. Returns -1, 0 or +1.
int kronecker(int64_t d, int64_t n);

}  // namespace murmur
