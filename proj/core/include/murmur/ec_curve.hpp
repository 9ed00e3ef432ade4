#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace murmur {

enum class KodairaType { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

const char* kodaira_name(KodairaType t);

/// Local reduction data at one prime, from Tate's algorithm on the
/// (possibly non-minimal) input model.
struct LocalData {
    int64_t p = 0;
    KodairaType type = KodairaType::I0;
    int f = 0;          // conductor exponent
    int n = 0;          // index for In / In*
    bool split = false; // split multiplicative (In only)
    int v_delta = 0;    // valuation of the minimal discriminant
    int u_steps = 0;    // p-rescalings applied to reach the minimal model
    std::array<int64_t, 5> minimal_model{};  // a1,a2,a3,a4,a6 locally minimal
};

/// Short Weierstrass curve y^2 = x^3 + ax + b with cached local data.
struct CurveEntry {
    int64_t a = 0;
    int64_t b = 0;
    int64_t disc = 0;       // -16(4a^3 + 27b^2)
    int64_t conductor = 0;  // 0 until computed
    int root_number = 0;    // 0 until computed
    std::map<int64_t, int> ap_cache;   // includes bad-prime coefficients in {-1,0,1}
    std::vector<LocalData> local_data;

    /// a_p for any prime: cache, bad-prime local coefficient, or point count.
    int64_t ap(int64_t p) const;
};

int64_t curve_discriminant(int64_t a, int64_t b);  // throws on overflow or zero

/// Tate's algorithm at p on [a1,a2,a3,a4,a6]; handles non-minimal input.
LocalData tate_local(std::array<int64_t, 5> model, int64_t p);

/// Conductor N = prod p^{f_p} over p | disc.
int64_t tate_conductor(int64_t a, int64_t b);

/// Populates disc/conductor/local_data (a_p cache left lazy).
CurveEntry make_curve_entry(int64_t a, int64_t b);

/// Global root number omega = -prod_{p | N} w_p with the standard local signs.
int root_number(const CurveEntry& entry);

/// a_p = p + 1 - #E(F_p) by Legendre-symbol sum (p < 2^16) or order counting
/// (baby-step giant-step) above. Requires p > 3 and p not dividing disc.
int64_t ap_point_count(int64_t a, int64_t b, int64_t p);

/// Legendre-sum point count reusing a caller-provided residue table
/// chi[v] in {-1,0,1} for v in [0, p).
int64_t ap_point_count(int64_t a, int64_t b, int64_t p, const int8_t* chi_table);

void build_legendre_table(int64_t p, std::vector<int8_t>& out);

/// s_k = alpha_p^k + conj(alpha_p)^k from the normalized recurrence
/// s_k = (a_p/sqrt p) s_{k-1} - s_{k-2}.
double ap_prime_power_sum(int64_t a_p, int64_t p, int k);

/// Residual of the smoothed theta-type symmetry theta(1/x) = w x^2 theta(x)
/// for the candidate sign; small only for the true root number.
/// Throws when the coefficient tail bound at n_terms exceeds 1e-4.
double functional_equation_check(const CurveEntry& entry, int64_t n_terms, int sign);
double functional_equation_check(const CurveEntry& entry, int64_t n_terms);

/// Sign in {-1,+1} minimizing the theta-symmetry residual.
int preferred_functional_equation_sign(const CurveEntry& entry, int64_t n_terms);

}  // namespace murmur
