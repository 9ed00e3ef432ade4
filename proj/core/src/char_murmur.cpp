#include "murmur/char_murmur.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "murmur/kronecker.hpp"
#include "murmur/parallel.hpp"

namespace murmur {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kPiSqOver6 = 1.6449340668482264364724151666460252;

/// Prime-power events below X_max, sorted by value: (value, log p, k, prime).
struct PrimePowerEvent {
    double value;
    double logp;
    int k;
    int64_t p;
};

std::vector<PrimePowerEvent> prime_power_events(double X_max, const PrimeTable& table) {
    std::vector<PrimePowerEvent> ev;
    ev.reserve(table.size() + 256);
    for (std::size_t i = 0; i < table.primes.size(); ++i) {
        const double p = static_cast<double>(table.primes[i]);
        if (!(p < X_max)) break;
        int k = 1;
        for (double pw = p; pw < X_max; pw *= p, ++k)
            ev.push_back({pw, table.logs[i], k, table.primes[i]});
    }
    std::sort(ev.begin(), ev.end(),
              [](const PrimePowerEvent& a, const PrimePowerEvent& b) { return a.value < b.value; });
    return ev;
}

PrimeTable table_for(double X) {
    return sieve_primes(static_cast<int64_t>(std::ceil(X)) + 1);
}

// one chi_d(p)^k log p contribution
inline double char_term(int chi, int k, double logp, bool odd_k_only) {
    if (chi == 0) return 0.0;
    if (odd_k_only) return (k & 1) ? static_cast<double>(chi) * logp : 0.0;
    return ((k & 1) ? static_cast<double>(chi) : 1.0) * logp;
}

struct VecPartial {
    std::vector<double> v;
};

// family-average kernel of the character prediction, without the (pi X/d) power
Complex char_kernel(Complex s) {
    return kPiSqOver6 * gamma_ratio_even(s) * zeta(2.0 - 2.0 * s) / zeta(3.0 - 2.0 * s) / s;
}

/// Precomputes weight * kernel * family-sum per contour node so that the
/// main term at any X costs one rotation sweep over the nodes.
class CharPredictionEngine {
public:
    CharPredictionEngine(std::span<const double> d_values, const ContourSpec& contour)
        : contour_(contour), t_nodes_(contour.nodes()) {
        if (d_values.empty())
            throw std::invalid_argument("predicted_char_main_term: empty family");
        contour_.validate(0.75);
        const int64_t n = contour_.n_points;
        const double c = contour_.c;
        const double h = contour_.spacing();
        const double invF = 1.0 / static_cast<double>(d_values.size());

        std::vector<Complex> kernel(static_cast<std::size_t>(n));
        parallel_reduce_chunks<int>(
            n,
            [&](int64_t lo, int64_t hi) {
                for (int64_t j = lo; j < hi; ++j)
                    kernel[static_cast<std::size_t>(j)] =
                        char_kernel(Complex(c, t_nodes_[static_cast<std::size_t>(j)]));
                return 0;
            },
            [](int a, int) { return a; }, 0);

        // S_j = (1/#F) sum_d d^{1/2 - s_j} via a rotation recurrence per d
        auto fam_chunk = [&](int64_t lo, int64_t hi) {
            VecPartial part;
            part.v.assign(static_cast<std::size_t>(2 * n), 0.0);
            for (int64_t i = lo; i < hi; ++i) {
                const double logd = std::log(d_values[static_cast<std::size_t>(i)]);
                const double mag = std::exp((0.5 - c) * logd);
                Complex rot = mag * std::exp(Complex(0.0, -t_nodes_[0] * logd));
                const Complex step = std::exp(Complex(0.0, -h * logd));
                for (int64_t j = 0; j < n; ++j) {
                    part.v[static_cast<std::size_t>(2 * j)] += rot.real();
                    part.v[static_cast<std::size_t>(2 * j + 1)] += rot.imag();
                    rot *= step;
                }
            }
            return part;
        };
        auto fam_combine = [n](VecPartial a, const VecPartial& b) {
            if (a.v.empty()) a.v.assign(static_cast<std::size_t>(2 * n), 0.0);
            if (!b.v.empty())
                for (std::size_t j = 0; j < a.v.size(); ++j) a.v[j] += b.v[j];
            return a;
        };
        const VecPartial fam = parallel_reduce_chunks<VecPartial>(
            static_cast<int64_t>(d_values.size()), fam_chunk, fam_combine, VecPartial{});

        weighted_.resize(static_cast<std::size_t>(n));
        for (int64_t j = 0; j < n; ++j) {
            const Complex Sj(fam.v[static_cast<std::size_t>(2 * j)] * invF,
                             fam.v[static_cast<std::size_t>(2 * j + 1)] * invF);
            weighted_[static_cast<std::size_t>(j)] =
                contour_.weight(j) * kernel[static_cast<std::size_t>(j)] * Sj;
        }
    }

    /// Normalized main term (the Eq-with-1/sqrt(X) form).
    double evaluate(double X) const {
        const int64_t n = contour_.n_points;
        const double logpx = std::log(kPi * X);
        const double mag = std::exp((contour_.c - 0.5) * logpx);
        Complex rot = mag * std::exp(Complex(0.0, t_nodes_[0] * logpx));
        const Complex step = std::exp(Complex(0.0, contour_.spacing() * logpx));
        Complex sum(0.0, 0.0);
        for (int64_t j = 0; j < n; ++j) {
            sum += weighted_[static_cast<std::size_t>(j)] * rot;
            rot *= step;
        }
        sum /= 2.0 * kPi;
        if (std::abs(sum.imag()) > 1e-6 * std::max(1.0, std::abs(sum.real())) &&
            std::abs(sum.imag()) > 1e-6)
            throw std::runtime_error(
                "predicted_char_main_term: imaginary residue exceeds 1e-6");
        return sum.real();
    }

private:
    ContourSpec contour_;
    std::vector<double> t_nodes_;
    std::vector<Complex> weighted_;  // w_j * K(s_j) * S_j
};

}  // namespace

void WindowSpec::validate() const {
    if (!(X > 0.0)) throw std::invalid_argument("WindowSpec: X must be positive");
    if (!(delta > 0.5 && delta < 1.0))
        throw std::invalid_argument("WindowSpec: require 1/2 < delta < 1");
}

double empirical_char_sum(const DiscriminantFamily& family, double X, bool odd_k_only,
                          const PrimeTable& table) {
    if (family.empty()) throw std::invalid_argument("empirical_char_sum: empty family");
    if (!(X > 0.0)) throw std::invalid_argument("empirical_char_sum: X must be positive");
    if (X <= 2.0) return 0.0;
    const auto events = prime_power_events(X, table);
    const int64_t n = static_cast<int64_t>(family.size());
    auto chunk = [&](int64_t lo, int64_t hi) {
        double acc = 0.0;
        for (int64_t i = lo; i < hi; ++i) {
            const int64_t d = family.members[static_cast<std::size_t>(i)];
            for (const auto& e : events)
                acc += char_term(kronecker(d, e.p), e.k, e.logp, odd_k_only);
        }
        return acc;
    };
    const double total = parallel_reduce_chunks<double>(
        n, chunk, [](double a, double b) { return a + b; }, 0.0);
    return total / static_cast<double>(n);
}

double empirical_char_sum(const DiscriminantFamily& family, double X, bool odd_k_only) {
    const auto table = table_for(X);
    return empirical_char_sum(family, X, odd_k_only, table);
}

double ramified_correction(const DiscriminantFamily& family, double X,
                           const PrimeTable& table) {
    if (!(X > 0.0)) throw std::invalid_argument("ramified_correction: X must be positive");
    if (family.empty()) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < table.primes.size(); ++i) {
        const int64_t p = table.primes[i];
        const double pd = static_cast<double>(p);
        if (!(pd * pd < X)) break;
        int even_powers = 0;
        for (double pw = pd * pd; pw < X; pw *= pd * pd) ++even_powers;
        int64_t divisible = 0;
        for (int64_t d : family.members)
            if (d % p == 0) ++divisible;
        acc += static_cast<double>(even_powers) * table.logs[i] *
               static_cast<double>(divisible) / static_cast<double>(family.size());
    }
    return acc;
}

double ramified_correction(const DiscriminantFamily& family, double X) {
    const auto table = table_for(std::sqrt(X) + 2.0);
    return ramified_correction(family, X, table);
}

double predicted_char_main_term(std::span<const double> d_values, double X,
                                const ContourSpec& contour, bool normalized) {
    if (!(X > 0.0)) throw std::invalid_argument("predicted_char_main_term: X must be positive");
    const CharPredictionEngine engine(d_values, contour);
    const double value = engine.evaluate(X);
    return normalized ? value : std::sqrt(X) * value;
}

double predicted_char_main_term(const DiscriminantFamily& family, double X,
                                const ContourSpec& contour, bool normalized) {
    std::vector<double> ds;
    ds.reserve(family.size());
    for (int64_t d : family.members) ds.push_back(static_cast<double>(d));
    return predicted_char_main_term(ds, X, contour, normalized);
}

MurmurationCurve char_murmuration_curve(const DiscriminantFamily& family,
                                        std::span<const double> X_grid,
                                        const ContourSpec& contour, bool odd_k_only) {
    if (X_grid.empty()) throw std::invalid_argument("char_murmuration_curve: empty grid");
    for (std::size_t i = 1; i < X_grid.size(); ++i)
        if (!(X_grid[i] > X_grid[i - 1]))
            throw std::invalid_argument("char_murmuration_curve: grid must be increasing");
    if (family.empty()) throw std::invalid_argument("char_murmuration_curve: empty family");

    const double X_max = X_grid.back();
    const auto table = table_for(X_max);
    const auto events = prime_power_events(X_max, table);
    const std::size_t ng = X_grid.size();
    const int64_t nf = static_cast<int64_t>(family.size());

    // empirical: one ascending pass over prime powers per d
    auto emp_chunk = [&](int64_t lo, int64_t hi) {
        VecPartial part;
        part.v.assign(ng, 0.0);
        for (int64_t i = lo; i < hi; ++i) {
            const int64_t d = family.members[static_cast<std::size_t>(i)];
            double cum = 0.0;
            std::size_t g = 0;
            for (const auto& e : events) {
                while (g < ng && !(e.value < X_grid[g])) part.v[g++] += cum;
                if (g == ng) break;
                cum += char_term(kronecker(d, e.p), e.k, e.logp, odd_k_only);
            }
            while (g < ng) part.v[g++] += cum;
        }
        return part;
    };
    auto vec_combine = [ng](VecPartial a, const VecPartial& b) {
        if (a.v.empty()) a.v.assign(ng, 0.0);
        if (!b.v.empty())
            for (std::size_t j = 0; j < ng; ++j) a.v[j] += b.v[j];
        return a;
    };
    const VecPartial emp =
        parallel_reduce_chunks<VecPartial>(nf, emp_chunk, vec_combine, VecPartial{});

    std::vector<double> ds;
    ds.reserve(family.size());
    for (int64_t d : family.members) ds.push_back(static_cast<double>(d));
    const CharPredictionEngine engine(ds, contour);

    MurmurationCurve curve;
    curve.error_budget =
        "O(X^{1/2+eps} T^eps R(D) #F^{-1} + X^{1+eps} T^{-1+eps} D^eps), R(D) = O(D^{1/2+eps})";
    const double D_scale = static_cast<double>(family.d_hi);
    curve.abscissae.assign(X_grid.begin(), X_grid.end());
    for (std::size_t g = 0; g < ng; ++g) {
        const double X = X_grid[g];
        curve.y_values.push_back(X / D_scale);
        curve.correction.push_back(ramified_correction(family, X, table) / std::sqrt(X));
        curve.predicted.push_back(engine.evaluate(X));
        curve.empirical.push_back(emp.v[g] / static_cast<double>(nf) / std::sqrt(X));
        curve.difference.push_back(curve.empirical[g] - curve.predicted[g]);
    }
    return curve;
}

std::pair<double, double> windowed_difference(const DiscriminantFamily& family,
                                              const WindowSpec& window,
                                              const ContourSpec& contour, bool odd_k_only) {
    window.validate();
    const double X0 = window.X;
    const double X1 = window.X + std::pow(window.X, window.delta);
    const auto table = table_for(X1);
    const double emp = empirical_char_sum(family, X1, odd_k_only, table) -
                       empirical_char_sum(family, X0, odd_k_only, table);
    std::vector<double> ds;
    ds.reserve(family.size());
    for (int64_t d : family.members) ds.push_back(static_cast<double>(d));
    const CharPredictionEngine engine(ds, contour);
    const double pred = std::sqrt(X1) * engine.evaluate(X1) - std::sqrt(X0) * engine.evaluate(X0);
    return {emp, pred};
}

double cech_empirical(int64_t N, double X, const WeightFunction& w) {
    if (N < 1) throw std::invalid_argument("cech_empirical: N must be >= 1");
    if (!(X > 1.0)) throw std::invalid_argument("cech_empirical: X must be > 1");
    if (X <= 2.0) return 0.0;
    const auto table = table_for(X);
    const auto events = prime_power_events(X, table);

    double acc = 0.0;
    double max_weight = 0.0;
    const double invN = 1.0 / static_cast<double>(N);
    const double invSqrtX = 1.0 / std::sqrt(X);
    // generous enumeration bound; the weight cutoff triggers earlier
    const int64_t n_cap = 128 * N + 64;
    const auto odd_sf = enumerate_odd_squarefree(n_cap);
    for (int64_t nval : odd_sf) {
        const double f = w.eval(static_cast<double>(nval) * invN);
        max_weight = std::max(max_weight, f);
        if (max_weight > 0.0 && f < 1e-12 * max_weight) break;
        if (f == 0.0) continue;
        double inner = 0.0;
        for (const auto& e : events)
            inner += char_term(kronecker(e.p, nval), e.k, e.logp, /*odd_k_only=*/false);
        acc += invN * f * invSqrtX * inner;
    }
    return acc;
}

double cech_predicted(int64_t N, double y, const ContourSpec& contour,
                      const WeightFunction& w) {
    if (N < 1) throw std::invalid_argument("cech_predicted: N must be >= 1");
    if (!(y > 0.0)) throw std::invalid_argument("cech_predicted: y must be positive");
    contour.validate(0.75);

    const auto t_nodes = contour.nodes();
    const double c = contour.c;
    const bool exp_weight = w.kind == WeightFunction::Kind::Exponential;
    auto fhat = [&](Complex z) { return exp_weight ? gamma_fn(z) : mellin(w, z); };

    auto node_value = [&](int64_t j) -> Complex {
        const Complex s(c, t_nodes[static_cast<std::size_t>(j)]);
        const Complex z2 = zeta(2.0 - 2.0 * s);
        const Complex z3 = zeta(3.0 - 2.0 * s);
        const Complex zeta2_removed = z3 * (1.0 - std::exp(-(3.0 - 2.0 * s) * std::log(2.0)));
        const Complex kernel = 0.25 * fhat(1.5 - s) *
                               (gamma_ratio_even(s) + gamma_ratio_odd(s)) * z2 / zeta2_removed;
        const Complex ypow = std::exp((s - 0.5) * std::log(kPi * y));
        return contour.weight(j) * kernel * ypow / s;
    };
    struct CPartial { Complex v{0.0, 0.0}; };
    const CPartial total = parallel_reduce_chunks<CPartial>(
        contour.n_points,
        [&](int64_t lo, int64_t hi) {
            CPartial p;
            for (int64_t j = lo; j < hi; ++j) p.v += node_value(j);
            return p;
        },
        [](CPartial a, const CPartial& b) { a.v += b.v; return a; }, CPartial{});
    Complex main = total.v / (2.0 * kPi);
    if (std::abs(main.imag()) > 1e-6 * std::max(1.0, std::abs(main.real())))
        throw std::runtime_error("cech_predicted: imaginary residue exceeds 1e-6");

    const double X = static_cast<double>(N) * y;
    const double fhat1 = fhat(Complex(1.0, 0.0)).real();
    const double secondary =
        (2.0 * fhat1 / (3.0 * kPiSqOver6)) * chebyshev_psi(std::sqrt(X)) / std::sqrt(X);
    return main.real() + secondary;
}

double explicit_formula_residual(int64_t d, double X, double T) {
    if (!is_fundamental_discriminant(d))
        throw std::invalid_argument("explicit_formula_residual: d must be fundamental");
    if (!(X > 2.0)) throw std::invalid_argument("explicit_formula_residual: X must be > 2");
    if (!(T > 2.0 && T < X))
        throw std::invalid_argument("explicit_formula_residual: require 2 < T < X");

    const auto table = table_for(X);
    double lhs = 0.0;
    {
        const auto events = prime_power_events(X, table);
        for (const auto& e : events)
            lhs += char_term(kronecker(d, e.p), e.k, e.logp, /*odd_k_only=*/false);
    }

    const double c = 0.6;
    const int64_t n = std::max<int64_t>(10000, static_cast<int64_t>(8.0 * T * std::log(X) / kPi));
    ContourSpec contour{c, T, n, ContourRule::Trapezoid};
    const auto t_nodes = contour.nodes();
    const double logX = std::log(X);
    struct CPartial { Complex v{0.0, 0.0}; };
    const CPartial total = parallel_reduce_chunks<CPartial>(
        n,
        [&](int64_t lo, int64_t hi) {
            CPartial p;
            for (int64_t j = lo; j < hi; ++j) {
                const Complex s(c, t_nodes[static_cast<std::size_t>(j)]);
                p.v += contour.weight(j) * l_log_derivative(s, d) * std::exp(s * logX) / s;
            }
            return p;
        },
        [](CPartial a, const CPartial& b) { a.v += b.v; return a; }, CPartial{});
    const double rhs = -(total.v / (2.0 * kPi)).real();
    return std::abs(lhs - rhs);
}

std::vector<double> default_char_grid(int n) {
    std::vector<double> grid(static_cast<std::size_t>(n));
    const double lo = 1e4, hi = 1e6;
    for (int i = 0; i < n; ++i)
        grid[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return grid;
}

}  // namespace murmur
