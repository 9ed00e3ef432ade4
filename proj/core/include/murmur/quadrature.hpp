#pragma once

#include <cmath>
#include <complex>
#include <functional>

namespace murmur {

/// Recursive adaptive Simpson on [a, b]; works for double or complex values.
template <typename F>
auto adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 40)
    -> decltype(f(a)) {
    using V = decltype(f(a));
    struct Impl {
        const std::remove_reference_t<F>& fn;
        int max_depth;
        V recurse(double a, double m, double b, V fa, V fm, V fb, V whole, double tol, int depth) {
            const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            const V flm = fn(lm), frm = fn(rm);
            const V left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            const V right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            const V delta = left + right - whole;
            if (depth >= max_depth || std::abs(delta) <= 15.0 * tol)
                return left + right + delta / 15.0;
            return recurse(a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
                   recurse(m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
        }
    };
    Impl impl{f, max_depth};
    const double m = 0.5 * (a + b);
    const V fa = f(a), fm = f(m), fb = f(b);
    const V whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return impl.recurse(a, m, b, fa, fm, fb, whole, tol, 0);
}

}  // namespace murmur
