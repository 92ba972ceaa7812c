#include "catphase/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "catphase/errors.hpp"

namespace catphase {

namespace {

constexpr double kMergeDistance = 1e-12;
constexpr double kZeroNorm = 1e-15;

// -p ln p with the 0 ln 0 = 0 convention.
double neg_p_ln_p(double p) {
    return p > 0.0 ? -p * std::log(p) : 0.0;
}

}  // namespace

Complex log_coherent_overlap(Complex a, Complex b) {
    return Complex(-0.5 * std::norm(a) - 0.5 * std::norm(b), 0.0) + std::conj(a) * b;
}

Complex coherent_overlap(Complex a, Complex b) {
    return std::exp(log_coherent_overlap(a, b));
}

double CoherentSuperposition::max_amplitude() const {
    double m = 0.0;
    for (const auto& c : components_) m = std::max(m, std::abs(c.amplitude));
    return m;
}

double CoherentSuperposition::norm() const {
    return catphase::gram_norm(components_);
}

double gram_norm(const std::vector<Component>& components) {
    // Re(z) of every overlap exponent is -|a-b|^2/2 <= 0, so no overflow here.
    double norm2 = 0.0;
    for (std::size_t k = 0; k < components.size(); ++k) {
        norm2 += std::norm(components[k].coefficient);
        for (std::size_t l = 0; l < k; ++l) {
            const Complex cross = std::conj(components[k].coefficient) * components[l].coefficient *
                                  coherent_overlap(components[k].amplitude, components[l].amplitude);
            norm2 += 2.0 * cross.real();
        }
    }
    return std::sqrt(std::max(norm2, 0.0));
}

CoherentSuperposition gram_normalize(std::vector<Component> components) {
    if (components.empty()) throw std::invalid_argument("gram_normalize: empty component list");

    std::vector<Component> merged;
    merged.reserve(components.size());
    for (const auto& c : components) {
        auto near = std::find_if(merged.begin(), merged.end(), [&](const Component& m) {
            return std::abs(m.amplitude - c.amplitude) < kMergeDistance;
        });
        if (near != merged.end()) {
            near->coefficient += c.coefficient;
        } else {
            merged.push_back(c);
        }
    }
    std::erase_if(merged, [](const Component& m) { return m.coefficient == Complex(0.0, 0.0); });

    const double norm = merged.empty() ? 0.0 : gram_norm(merged);
    if (norm < kZeroNorm) {
        throw ZeroNormError("gram_normalize: superposition cancels to zero norm");
    }
    for (auto& m : merged) m.coefficient /= norm;
    return CoherentSuperposition(std::move(merged));
}

CatParameters::CatParameters(Complex alpha0_, double gamma_) : alpha0(alpha0_), gamma(gamma_) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    gamma = std::fmod(gamma, two_pi);
    if (gamma < 0.0) gamma += two_pi;
    if (gamma >= two_pi) gamma = 0.0;
}

CoherentSuperposition make_cat(const CatParameters& p) {
    return gram_normalize({{Complex(1.0, 0.0), p.alpha0},
                           {std::polar(1.0, p.gamma), -p.alpha0}});
}

double solve_equientropic_weight(int n) {
    if (n < 2) throw std::invalid_argument("solve_equientropic_weight: need n >= 2");
    if (n == 2) {
        // The entropy of {1-x, x} only touches ln 2, at the equal-weight
        // point: the root is exactly 1/2 and not bracketable by sign.
        return 0.5;
    }
    const double k = static_cast<double>(n - 1);
    const double ln2 = std::numbers::ln2;

    // Shannon entropy of {1-kx, x, ..., x} minus ln 2; strictly increasing on
    // (0, 1/n], from -ln 2 up to ln n - ln 2 > 0, so the crossing below the
    // equal-weight point is transversal.
    const auto excess = [k, ln2](double x) {
        return neg_p_ln_p(1.0 - k * x) + k * neg_p_ln_p(x) - ln2;
    };

    double lo = 1e-300;
    double hi = 1.0 / static_cast<double>(n);
    if (!(excess(lo) < 0.0) || excess(hi) < 0.0) {
        throw NoRootError("solve_equientropic_weight: bracket does not enclose the root");
    }
    for (int iter = 0; iter < 200 && hi - lo > 1e-14; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) < 0.0 ? lo : hi) = mid;
    }
    const double x = 0.5 * (lo + hi);

    // Residual of the product form 2 (1-kx)^(1-kx) x^(kx) - 1, in log space.
    const double residual = 2.0 * std::exp(-(excess(x) + ln2)) - 1.0;
    if (std::abs(residual) > 1e-12) {
        throw NoRootError("solve_equientropic_weight: residual above 1e-12");
    }
    return x;
}

CoherentSuperposition make_equientropic(Complex alpha0, int n) {
    const double x = solve_equientropic_weight(n);
    std::vector<Component> comps;
    comps.reserve(static_cast<std::size_t>(n));
    comps.push_back({Complex(std::sqrt(1.0 - (n - 1) * x), 0.0), alpha0});
    for (int k = 1; k < n; ++k) {
        comps.push_back({Complex(std::sqrt(x), 0.0),
                         std::polar(1.0, 2.0 * std::numbers::pi * k / n) * alpha0});
    }
    return gram_normalize(std::move(comps));
}

KerrSchedule::KerrSchedule(int m_, int n_, Complex alpha0_) : m(m_), n(n_), alpha0(alpha0_) {
    if (m < 1 || n < 1) throw std::invalid_argument("KerrSchedule: M and N must be positive");
    if (std::gcd(m, n) != 1) throw std::invalid_argument("KerrSchedule: M and N must be mutually prime");
}

CoherentSuperposition make_kerr_state(const KerrSchedule& s) {
    const int n = s.n;
    std::vector<Component> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        // The summand's phase is nu [(M/N) pi (nu-1) - phi_k] with
        // phi_k = (2k+N-3) pi/N, i.e. (pi/N) nu [M (nu-1) - 2k - N + 3]:
        // an integer multiple of pi/N, reduced exactly mod 2N.
        Complex c(0.0, 0.0);
        for (int nu = 1; nu <= n; ++nu) {
            long long j = static_cast<long long>(nu) *
                          (static_cast<long long>(s.m) * (nu - 1) - 2LL * k - n + 3LL);
            j = ((j % (2LL * n)) + 2LL * n) % (2LL * n);
            c += std::polar(1.0, std::numbers::pi * static_cast<double>(j) / n);
        }
        c /= static_cast<double>(n);
        const double phi_k = (2.0 * k + n - 3.0) * std::numbers::pi / n;
        comps.push_back({c, std::polar(1.0, phi_k) * s.alpha0});
    }
    // The coefficients already produce unit norm; normalize anyway to absorb
    // rounding in the overlap sum.
    return gram_normalize(std::move(comps));
}

int n_max(Complex alpha0) {
    return static_cast<int>(std::trunc(std::numbers::pi * std::abs(alpha0) / std::numbers::sqrt2));
}

CoherentSuperposition rotated(const CoherentSuperposition& state, double phase) {
    std::vector<Component> comps = state.components();
    const Complex u = std::polar(1.0, phase);
    for (auto& c : comps) c.amplitude *= u;
    return gram_normalize(std::move(comps));
}

}  // namespace catphase
