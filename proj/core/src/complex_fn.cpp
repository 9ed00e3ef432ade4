#include "murmur/complex_fn.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "murmur/discriminants.hpp"
#include "murmur/kronecker.hpp"
#include "murmur/primes.hpp"

namespace murmur {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogTwoPiHalf = 0.91893853320467274178032973640562;  // log(2*pi)/2

// Godfrey's Lanczos coefficients, g = 607/128, 15 terms.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// B_{2k}/(2k)! for k = 1..14
constexpr double kBernFact[15] = {
    0.0,  // unused
    8.3333333333333333333e-02,
    -1.3888888888888888889e-03,
    3.3068783068783068783e-05,
    -8.2671957671957671958e-07,
    2.0876756987868098979e-08,
    -5.2841901386874931848e-10,
    1.3382536530684678833e-11,
    -3.3896802963225828668e-13,
    8.5860620562778445641e-15,
    -2.1748686985580618730e-16,
    5.5090028283602295152e-18,
    -1.3954464685812523341e-19,
    3.5347070396294674717e-21,
    -8.9535174270375468504e-23,
};

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex lanczos_log_gamma_right(Complex z) {
    // valid for Re(z) >= 1/2
    z -= 1.0;
    Complex x = kLanczos[0];
    for (int i = 1; i < 15; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const Complex t = z + kLanczosG + 0.5;
    return kLogTwoPiHalf + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

Complex log_sin_pi(Complex z) {
    // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i) for Im z > 0, mirrored below
    const Complex i(0.0, 1.0);
    if (z.imag() > 0.0) {
        return -i * kPi * z + std::log(std::exp(2.0 * i * kPi * z) - 1.0) - std::log(2.0 * i);
    }
    return i * kPi * z + std::log(1.0 - std::exp(-2.0 * i * kPi * z)) - std::log(2.0 * i);
}

Complex log_gamma(Complex z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("log_gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return lanczos_log_gamma_right(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma_right(1.0 - z);
}

Complex gamma_fn(Complex z) { return std::exp(log_gamma(z)); }

namespace {

// Euler-Maclaurin core. With deflate_pole the (N+a)^{1-s}/(s-1) term is
// replaced by ((N+a)^{1-s} - 1)/(s-1), which is analytic at s = 1; the
// full function is then zeta(s,a) - 1/(s-1).
Complex hurwitz_em(Complex s, double a, bool deflate_pole) {
    const double t = std::abs(s.imag());
    int N = std::max(24, static_cast<int>(std::ceil(0.55 * (t + 30.0))));
    constexpr double kRelTol = 1e-13;
    Complex acc;
    for (int attempt = 0; attempt < 6; ++attempt, N *= 2) {
        acc = Complex(0.0, 0.0);
        for (int n = 0; n < N; ++n)
            acc += std::exp(-s * std::log(static_cast<double>(n) + a));
        const double w = static_cast<double>(N) + a;
        const double logw = std::log(w);
        if (deflate_pole) {
            // ((e^{(1-s) log w}) - 1)/(s-1), series for small argument
            const Complex z = (1.0 - s) * logw;
            if (std::abs(z) < 1e-4)
                acc += -logw * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0)));
            else
                acc += (std::exp(z) - 1.0) / (s - 1.0);
        } else {
            acc += std::exp((1.0 - s) * logw) / (s - 1.0);
        }
        const Complex winv_s = std::exp(-s * logw);
        acc += 0.5 * winv_s;

        Complex poch = s;                 // (s)_1
        Complex wpow = winv_s / w;        // w^{-s-1}
        bool certified = false;
        for (int k = 1; k <= 13; ++k) {
            acc += kBernFact[k] * poch * wpow;
            poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
            wpow /= w * w;
            const double next_mag = std::abs(kBernFact[k + 1]) * std::abs(poch) * std::abs(wpow);
            const double denom = s.real() + static_cast<double>(2 * k + 1);
            if (denom <= 0.0) continue;
            const double rem = next_mag * std::abs(s + static_cast<double>(2 * k + 1)) / denom;
            if (rem < kRelTol * (std::abs(acc) + 1.0)) { certified = true; break; }
        }
        if (certified) return acc;
    }
    return acc;  // best effort; only reached far outside the operating region
}

}  // namespace

Complex hurwitz_zeta(Complex s, double a) {
    if (s == Complex(1.0, 0.0)) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    if (!(a > 0.0 && a <= 1.0)) throw std::domain_error("hurwitz_zeta: need 0 < a <= 1");
    return hurwitz_em(s, a, /*deflate_pole=*/false);
}

Complex zeta(Complex s) {
    if (s == Complex(1.0, 0.0)) throw std::domain_error("zeta: pole at s = 1");
    return hurwitz_em(s, 1.0, /*deflate_pole=*/false);
}

Complex dirichlet_L(Complex s, int64_t d) {
    if (!is_fundamental_discriminant(d))
        throw std::invalid_argument("dirichlet_L: d must be a fundamental discriminant");
    // chi_d is nontrivial, so the 1/(s-1) poles cancel across the residue sum;
    // the deflated evaluation makes each term finite at s = 1.
    Complex sum(0.0, 0.0);
    for (int64_t a = 1; a <= d; ++a) {
        const int chi = kronecker(d, a);
        if (chi == 0) continue;
        sum += static_cast<double>(chi) *
               hurwitz_em(s, static_cast<double>(a) / static_cast<double>(d), true);
    }
    return std::exp(-s * std::log(static_cast<double>(d))) * sum;
}

Complex l_log_derivative_series(Complex s, int64_t d, int64_t cutoff) {
    const auto table = sieve_primes(cutoff);
    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < table.primes.size(); ++i) {
        const int64_t p = table.primes[i];
        const double logp = table.logs[i];
        const int chi = kronecker(d, p);
        if (chi == 0) continue;
        double pk = static_cast<double>(p);
        int chik = chi;
        while (pk < static_cast<double>(cutoff)) {
            sum += logp * static_cast<double>(chik) * std::exp(-s * std::log(pk));
            pk *= static_cast<double>(p);
            chik *= chi;
        }
    }
    return -sum;
}

Complex l_log_derivative(Complex s, int64_t d) {
    if (s.real() <= 0.5)
        throw std::domain_error("l_log_derivative: require Re(s) > 1/2");
    if (s.real() > 3.0) {
        // tail of sum_{p^k > M} log p * p^{-k sigma} is below 1e-9 for sigma > 3
        const double sigma = s.real();
        double M = std::pow(1e9 * (std::log(1e5) / (sigma - 1.0) + 1.0), 1.0 / (sigma - 1.0));
        M = std::min(std::max(M, 100.0), 1e5);
        return l_log_derivative_series(s, d, static_cast<int64_t>(M) + 1);
    }
    constexpr double h = 1e-5;
    const Complex Lp = dirichlet_L(s + h, d);
    const Complex Lm = dirichlet_L(s - h, d);
    const Complex L0 = dirichlet_L(s, d);
    if (std::abs(L0) < 1e-8)
        throw std::domain_error("l_log_derivative: evaluation too close to a zero of L");
    // log of the ratio: the ratio is near 1, so no branch crossing
    return std::log(Lp / Lm) / (2.0 * h);
}

Complex gamma_ratio_even(Complex s) {
    return std::exp(log_gamma((1.0 - s) / 2.0) - log_gamma(s / 2.0));
}

Complex gamma_ratio_odd(Complex s) {
    return std::exp(log_gamma((2.0 - s) / 2.0) - log_gamma((1.0 + s) / 2.0));
}

Complex gamma_ratio_ec(Complex s) {
    return std::exp(log_gamma(1.5 - s) - log_gamma(0.5 + s));
}

}  // namespace murmur
