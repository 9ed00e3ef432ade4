#include "murmur/hurwitz.hpp"

#include <stdexcept>

namespace murmur {

// Walk reduced positive-definite forms (a,b,c), -a < b <= a <= c with
// b >= 0 when |b| = a or a = c, accumulating 12*H(4ac - b^2).
HurwitzTable hurwitz_class_numbers(int64_t limit) {
    if (limit < 1) throw std::invalid_argument("hurwitz_class_numbers: limit must be >= 1");
    HurwitzTable t;
    t.limit = limit;
    t.twelfths.assign(static_cast<std::size_t>(limit), 0);
    t.twelfths[0] = -1;  // H(0) = -1/12

    for (int64_t a = 1; 3 * a * a < limit; ++a) {
        for (int64_t b = 0; b <= a; ++b) {
            for (int64_t c = a;; ++c) {
                const int64_t n = 4 * a * c - b * b;
                if (n >= limit) break;
                if (n <= 0) continue;
                int w;
                if (a == b && b == c)
                    w = 4;   // 1/3
                else if (b == 0 && a == c)
                    w = 6;   // 1/2
                else if (b == 0 || b == a || a == c)
                    w = 12;  // boundary form, only +b reduced
                else
                    w = 24;  // interior form, both signs of b reduced
                t.twelfths[static_cast<std::size_t>(n)] += w;
            }
        }
    }
    return t;
}

}  // namespace murmur
