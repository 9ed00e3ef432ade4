#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "murmur/ec_curve.hpp"
#include "murmur/ec_family.hpp"

namespace murmur {

/// Shared a_p store for a set of curves: one pass per prime with a
/// per-prime residue table and an (a mod p, b mod p) memo.
struct ApMatrix {
    std::vector<int64_t> primes;               // good-and-bad column labels
    std::vector<std::vector<int32_t>> rows;    // rows[i][j] = a_{p_j}(E_i); bad p uses local coeff

    int64_t ap(std::size_t curve, std::size_t prime_idx) const {
        return rows[curve][prime_idx];
    }
};

/// Fills a_p for all primes p < limit for every curve (conductors must be
/// computed so bad primes take their local coefficients).
ApMatrix build_ap_matrix(std::span<const CurveEntry> curves, int64_t limit);

/// (1/#class) sum over curves of sign omega of
///   (1/sqrt X) sum_{p^k < X, p not dividing N_E} (alpha_p^k + conj^k) log p.
double empirical_ec_sum(const HeightFamily& family, int omega, double X);
double empirical_ec_sum(std::span<const CurveEntry> curves, double X);  // unsigned average

/// Same normalized trace sum for a single curve.
double curve_trace_sum(const CurveEntry& entry, double X, const ApMatrix& aps,
                       std::size_t row);

}  // namespace murmur
