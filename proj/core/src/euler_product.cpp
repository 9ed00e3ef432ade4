#include "murmur/euler_product.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace murmur {

namespace {

constexpr double kHolomorphyEdge = -0.25;

// Moebius function for the prime-zeta expansion
int moebius_small(int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    if (n > 1) m = -m;
    return m;
}

// term lists c * p^{-e} for the tail expansion, truncated by Re(e)
struct PowerTerm {
    Complex coeff;
    Complex expo;
};

void push_term(std::vector<PowerTerm>& v, Complex c, Complex e, double e_cut) {
    if (e.real() <= e_cut && std::abs(c) > 1e-18) v.push_back({c, e});
}

std::vector<PowerTerm> mul_terms(const std::vector<PowerTerm>& a,
                                 const std::vector<PowerTerm>& b, double e_cut) {
    std::vector<PowerTerm> out;
    for (const auto& x : a)
        for (const auto& y : b)
            push_term(out, x.coeff * y.coeff, x.expo + y.expo, e_cut);
    return out;
}

std::vector<PowerTerm> merge_terms(std::vector<PowerTerm> v) {
    std::sort(v.begin(), v.end(), [](const PowerTerm& a, const PowerTerm& b) {
        if (a.expo.real() != b.expo.real()) return a.expo.real() < b.expo.real();
        return a.expo.imag() < b.expo.imag();
    });
    std::vector<PowerTerm> out;
    for (const auto& t : v) {
        if (!out.empty() && std::abs(out.back().expo - t.expo) < 1e-12)
            out.back().coeff += t.coeff;
        else
            out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const PowerTerm& t) { return std::abs(t.coeff) < 1e-15; }),
              out.end());
    return out;
}

}  // namespace

void EulerProductConfig::validate() const {
    if (P_max < 5) throw std::invalid_argument("EulerProductConfig: P_max >= 5");
    if (M_max < 5) throw std::invalid_argument("EulerProductConfig: M_max >= 5");
}

std::pair<int, int> reference_curve_coefficients(int64_t r, int64_t t) {
    const int64_t rr = ((r % 6) + 6) % 6;
    const int64_t tt = ((t % 6) + 6) % 6;
    if (rr % 3 == 0 || tt % 2 == 0)
        throw std::invalid_argument("reference_curve_coefficients: need 3 coprime to r, t odd");
    int a3 = 0;
    if (rr % 3 == 2) {
        if (tt % 3 == 1) a3 = -3;
        else if (tt % 3 == 2) a3 = 3;
    }
    return {0, a3};  // a_2 vanishes for every admissible residue class
}

Complex prime_zeta(Complex s) {
    if (s.real() <= 1.0) throw std::domain_error("prime_zeta: require Re(s) > 1");
    Complex acc(0.0, 0.0);
    for (int k = 1; k <= 64; ++k) {
        const Complex ks = static_cast<double>(k) * s;
        if (ks.real() > 70.0) break;
        const int mu = moebius_small(k);
        if (mu == 0) continue;
        const Complex term = static_cast<double>(mu) / static_cast<double>(k) *
                             std::log(zeta(ks));
        acc += term;
        if (std::abs(term) < 1e-17 && k > 3) break;
    }
    return acc;
}

AEulerEngine::AEulerEngine(const EulerProductConfig& cfg) : cfg_(cfg) {
    cfg_.validate();
    const auto table = sieve_primes(cfg_.P_max + 1);
    for (int64_t p : table.primes)
        if (p > 3) primes_.push_back(p);
    traces_ = build_trace_table(cfg_.P_max + 1, cfg_.M_max);
}

AEulerResult AEulerEngine::evaluate(Complex alpha, Complex gamma,
                                    bool with_tail_correction) const {
    if (alpha.real() <= kHolomorphyEdge || gamma.real() <= kHolomorphyEdge)
        throw std::domain_error("A_euler: outside the holomorphy region Re > -1/4");

    const Complex sa = 1.0 + alpha + gamma;
    const Complex sb = 1.0 + 2.0 * gamma;

    Complex log_prod(0.0, 0.0);
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        const double p = static_cast<double>(primes_[i]);
        const double lp = std::log(p);
        const Complex a = std::exp(-sa * lp);  // p^{-1-alpha-gamma}
        const Complex b = std::exp(-sb * lp);  // p^{-1-2 gamma}
        const double p9 = std::pow(p, 9.0);
        const double w = 1.0 - (p9 - 1.0) / (p9 * p - 1.0);

        // sum_{m >= 5} (Tr_{2m+2}(p)/p^{m+1/2}) p^{-m(1+2 alpha)}
        const Complex q = std::exp(-(1.0 + 2.0 * alpha) * lp);
        Complex qm = std::pow(q, 5.0);
        Complex tsum(0.0, 0.0);
        const auto& row = traces_.values[i];
        for (int m = 5; m <= cfg_.M_max; ++m) {
            tsum += row[static_cast<std::size_t>(m - 5)] * qm;
            qm *= q;
        }
        const Complex tpre = std::exp((1.0 + 2.0 * alpha + gamma) * lp) -
                             std::exp((1.0 + alpha + 2.0 * gamma) * lp) +
                             std::exp(gamma * lp) - std::exp(alpha * lp);
        const Complex tfac = tpre * std::exp(-(1.5 + alpha + 2.0 * gamma) * lp);

        const Complex third =
            (a / p - b / p) / (std::exp((2.0 + 2.0 * alpha) * lp) - 1.0);
        const Complex bracket = 1.0 + w * (b - a + third + tfac * tsum);
        // pair with the local factor of zeta(1+a+g)/zeta(1+2g)
        log_prod += std::log((1.0 - b) / (1.0 - a) * bracket);
    }

    // p = 2, 3: zeta-ratio local parts times the reference-curve factors
    const int ap23[2] = {cfg_.a2, cfg_.a3};
    for (int pi = 0; pi < 2; ++pi) {
        const double p = pi == 0 ? 2.0 : 3.0;
        const double ap = ap23[pi];
        const double lp = std::log(p);
        const Complex a = std::exp(-sa * lp);
        const Complex b = std::exp(-sb * lp);
        const Complex num = 1.0 - ap * std::exp(-(1.0 + gamma) * lp) + b;
        const Complex den = 1.0 - ap * std::exp(-(1.0 + alpha) * lp) +
                            std::exp(-(1.0 + 2.0 * alpha) * lp);
        log_prod += std::log((1.0 - b) / (1.0 - a)) + std::log(num / den);
    }

    // tail over p > P_max: the paired local factor deviates by O(p^{-2});
    // its leading powers are summed exactly with the prime zeta function.
    double err = 3.0 * std::pow(static_cast<double>(cfg_.P_max), -1.25) +
                 1.0 / (static_cast<double>(cfg_.P_max) *
                        std::log(static_cast<double>(cfg_.P_max)));
    if (with_tail_correction && std::abs(alpha.imag()) <= 60.0 &&
        std::abs(gamma.imag()) <= 60.0) {
        constexpr double kECut = 4.2;
        std::vector<PowerTerm> z;
        // z = (1-x)(b-a) + (1-x)(a-b) x^{3+2 alpha}, x = 1/p
        push_term(z, 1.0, sb, kECut);
        push_term(z, -1.0, sa, kECut);
        push_term(z, -1.0, sb + 1.0, kECut);
        push_term(z, 1.0, sa + 1.0, kECut);
        const Complex e3 = 3.0 + 2.0 * alpha;
        push_term(z, 1.0, sa + e3, kECut);
        push_term(z, -1.0, sb + e3, kECut);
        push_term(z, -1.0, sa + e3 + 1.0, kECut);
        push_term(z, 1.0, sb + e3 + 1.0, kECut);
        // log((1-b)/(1-a)(1+z)) = sum_k (a^k - b^k)/k + z - z^2/2 + z^3/3
        std::vector<PowerTerm> total = z;
        const auto z2 = mul_terms(z, z, kECut);
        for (const auto& t : z2) push_term(total, -0.5 * t.coeff, t.expo, kECut);
        const auto z3 = mul_terms(z2, z, kECut);
        for (const auto& t : z3) push_term(total, t.coeff / 3.0, t.expo, kECut);
        for (int k = 1; k <= 8; ++k) {
            push_term(total, 1.0 / k, static_cast<double>(k) * sa, kECut);
            push_term(total, -1.0 / k, static_cast<double>(k) * sb, kECut);
        }
        total = merge_terms(std::move(total));
        Complex tail(0.0, 0.0);
        bool applicable = true;
        for (const auto& t : total)
            if (t.expo.real() <= 1.02) { applicable = false; break; }
        if (applicable) {
            for (const auto& t : total) {
                Complex head = std::exp(-t.expo * std::log(2.0)) +
                               std::exp(-t.expo * std::log(3.0));
                for (int64_t p : primes_)
                    head += std::exp(-t.expo * std::log(static_cast<double>(p)));
                tail += t.coeff * (prime_zeta(t.expo) - head);
            }
            log_prod += tail;
            err = 3.0 * std::pow(static_cast<double>(cfg_.P_max), -1.25) +
                  10.0 * std::pow(static_cast<double>(cfg_.P_max), 1.0 - kECut);
        }
    }
    return {std::exp(log_prod), err};
}

Complex AEulerEngine::alpha_derivative_diag(Complex r) const {
    constexpr double h = 1e-5;
    auto diff = [&](double step) {
        return (evaluate(r + step, r).value - evaluate(r - step, r).value) / (2.0 * step);
    };
    const Complex d1 = diff(h);
    const Complex d2 = diff(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;  // one Richardson step
}

AEulerResult A_euler(Complex alpha, Complex gamma, const EulerProductConfig& cfg) {
    return AEulerEngine(cfg).evaluate(alpha, gamma);
}

Complex A_alpha_diag(Complex r, const EulerProductConfig& cfg) {
    return AEulerEngine(cfg).alpha_derivative_diag(r);
}

}  // namespace murmur
