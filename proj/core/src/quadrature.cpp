// adaptive_simpson is header-only; translation unit kept so the header is
// compiled standalone at least once.
#include "murmur/quadrature.hpp"
