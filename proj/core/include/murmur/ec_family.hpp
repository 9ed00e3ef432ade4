#pragma once

#include <cstdint>
#include <vector>

#include "murmur/ec_curve.hpp"

namespace murmur {

/// Height-ordered family: a = r mod 6, b = t mod 6, |a| <= H^{1/3},
/// |b| <= H^{1/2}, and p^4 | a implies p^6 does not divide b.
struct HeightFamily {
    double H = 0.0;
    int64_t r = 1;
    int64_t t = 1;
    std::vector<CurveEntry> entries;
    std::vector<std::size_t> plus_indices;   // omega = +1, set by compute_signs
    std::vector<std::size_t> minus_indices;  // omega = -1

    std::size_t size() const { return entries.size(); }
};

/// Enumerates the family; conductors and signs stay lazy until
/// compute_conductors / compute_signs run.
HeightFamily enumerate_height_family(double H, int64_t r, int64_t t);

void compute_conductors(HeightFamily& family);
void compute_signs(HeightFamily& family);  // fills root_number and the partition

/// Curves from a height-family search window with C < N_E < C + C^delta and
/// the requested sign.
struct ConductorWindowFamily {
    double C = 0.0;
    double delta = 0.6;
    int omega = 1;
    std::vector<CurveEntry> entries;
};

/// Builds the window family by filtering the height family of height
/// search_H (curves outside it are not examined).
ConductorWindowFamily build_conductor_window_family(double C, double delta, int omega,
                                                    double search_H);

}  // namespace murmur
