#include "murmur/ec_family.hpp"

#include <cmath>
#include <stdexcept>

#include "murmur/parallel.hpp"

namespace murmur {

namespace {

// largest k >= 0 with k^e <= x
int64_t floor_root(double x, int e) {
    if (x < 1.0) return 0;
    int64_t k = static_cast<int64_t>(std::floor(std::pow(x, 1.0 / e)));
    while (std::pow(static_cast<double>(k + 1), e) <= x) ++k;
    while (k > 0 && std::pow(static_cast<double>(k), e) > x) --k;
    return k;
}

bool minimality_condition(int64_t a, int64_t b) {
    // p^4 | a implies p^6 does not divide b
    if (a == 0) {
        // every prime divides a; require b free of sixth powers
        for (int64_t p = 2; p * p * p * p * p * p <= std::abs(b); ++p) {
            int64_t q = p * p * p;
            q *= q;
            if (b % q == 0) return false;
        }
        return true;
    }
    const int64_t aa = std::abs(a);
    for (int64_t p = 2; p * p * p * p <= aa; ++p) {
        int64_t p4 = p * p * p * p;
        if (aa % p4 != 0) continue;
        int64_t p6 = p4 * p * p;
        if (b % p6 == 0) return false;
    }
    return true;
}

}  // namespace

HeightFamily enumerate_height_family(double H, int64_t r, int64_t t) {
    if (r % 3 == 0) throw std::invalid_argument("enumerate_height_family: need 3 not dividing r");
    if (t % 2 == 0) throw std::invalid_argument("enumerate_height_family: need t odd");
    if (!(H >= 1.0)) throw std::invalid_argument("enumerate_height_family: need H >= 1");

    HeightFamily fam;
    fam.H = H;
    fam.r = ((r % 6) + 6) % 6;
    fam.t = ((t % 6) + 6) % 6;

    const int64_t a_max = floor_root(H, 3);       // |a|^3 <= H
    const int64_t b_max = floor_root(H, 2);       // |b|^2 <= H
    for (int64_t a = -a_max; a <= a_max; ++a) {
        if (((a % 6) + 6) % 6 != fam.r) continue;
        for (int64_t b = -b_max; b <= b_max; ++b) {
            if (((b % 6) + 6) % 6 != fam.t) continue;
            if (4 * a * a * a + 27 * b * b == 0) continue;
            if (!minimality_condition(a, b)) continue;
            CurveEntry e;
            e.a = a;
            e.b = b;
            e.disc = curve_discriminant(a, b);
            fam.entries.push_back(std::move(e));
        }
    }
    return fam;
}

void compute_conductors(HeightFamily& family) {
    const int64_t n = static_cast<int64_t>(family.entries.size());
    parallel_reduce_chunks<int>(
        n,
        [&](int64_t lo, int64_t hi) {
            for (int64_t i = lo; i < hi; ++i) {
                auto& e = family.entries[static_cast<std::size_t>(i)];
                if (e.conductor == 0) {
                    CurveEntry full = make_curve_entry(e.a, e.b);
                    full.root_number = e.root_number;
                    full.ap_cache.insert(e.ap_cache.begin(), e.ap_cache.end());
                    e = std::move(full);
                }
            }
            return 0;
        },
        [](int a, int) { return a; }, 0);
}

void compute_signs(HeightFamily& family) {
    compute_conductors(family);
    const int64_t n = static_cast<int64_t>(family.entries.size());
    parallel_reduce_chunks<int>(
        n,
        [&](int64_t lo, int64_t hi) {
            for (int64_t i = lo; i < hi; ++i) {
                auto& e = family.entries[static_cast<std::size_t>(i)];
                if (e.root_number == 0) e.root_number = root_number(e);
            }
            return 0;
        },
        [](int a, int) { return a; }, 0);
    family.plus_indices.clear();
    family.minus_indices.clear();
    for (std::size_t i = 0; i < family.entries.size(); ++i)
        (family.entries[i].root_number > 0 ? family.plus_indices : family.minus_indices)
            .push_back(i);
}

ConductorWindowFamily build_conductor_window_family(double C, double delta, int omega,
                                                    double search_H) {
    if (!(C > 0.0)) throw std::invalid_argument("conductor window: C must be positive");
    if (!(delta > 0.5))
        throw std::invalid_argument("conductor window: require delta > 1/2");
    if (omega != 1 && omega != -1)
        throw std::invalid_argument("conductor window: omega must be +-1");
    ConductorWindowFamily w;
    w.C = C;
    w.delta = delta;
    w.omega = omega;
    const double hi = C + std::pow(C, delta);
    // union over all admissible residue classes of the height family
    for (int64_t r : {1, 2, 4, 5}) {
        for (int64_t t : {1, 3, 5}) {
            HeightFamily base = enumerate_height_family(search_H, r, t);
            compute_signs(base);
            for (auto& e : base.entries) {
                const double N = static_cast<double>(e.conductor);
                if (N > C && N < hi && e.root_number == omega)
                    w.entries.push_back(std::move(e));
            }
        }
    }
    return w;
}

}  // namespace murmur
