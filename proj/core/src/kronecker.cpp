#include "murmur/kronecker.hpp"

namespace murmur {

namespace {
// (2/a) for odd a, indexed by a mod 8
constexpr int kTab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};

inline int mod8(int64_t a) { return static_cast<int>(((a % 8) + 8) % 8); }
}  // namespace

int kronecker(int64_t a, int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;

    int v = 0;
    while ((n & 1) == 0) { n >>= 1; ++v; }
    int k = 1;
    if (v & 1) k = kTab2[mod8(a)];
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // n odd and positive from here on
    for (;;) {
        if (a == 0) return (n > 1) ? 0 : k;
        v = 0;
        while ((a & 1) == 0) { a >>= 1; ++v; }
        if (v & 1) k *= kTab2[static_cast<int>(n & 7)];
        if (a < 0) {
            a = -a;
            if (n & 2) k = -k;  // (-1/n) = -1 for n = 3 mod 4
        }
        if (a & n & 2) k = -k;  // quadratic reciprocity flip
        const int64_t r = a;
        a = n % r;
        n = r;
    }
}

}  // namespace murmur
