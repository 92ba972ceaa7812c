#include "catphase/husimi.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace catphase {

namespace {
constexpr double kInvPi = 1.0 / std::numbers::pi;
constexpr double kLnPi = 1.1447298858494001741;
}  // namespace

double PhasePoint::angle() const {
    double t = std::arg(alpha);
    if (t < 0.0) t += 2.0 * std::numbers::pi;
    return t;
}

QValue q_value_with_log(const CoherentSuperposition& state, PhasePoint point) {
    const auto& comps = state.components();
    const double half_r2 = 0.5 * std::norm(point.alpha);
    const Complex conj_alpha = std::conj(point.alpha);

    // Factor exp(max Re z_k) out of sum_k c_k e^{z_k} so every summand has
    // modulus <= 1; the common scale re-enters through the logarithm only.
    double max_re = -std::numeric_limits<double>::infinity();
    for (const auto& c : comps) {
        const double re = -half_r2 - 0.5 * std::norm(c.amplitude) + (conj_alpha * c.amplitude).real();
        max_re = std::max(max_re, re);
    }

    Complex sum(0.0, 0.0);
    for (const auto& c : comps) {
        const Complex z = Complex(-half_r2 - 0.5 * std::norm(c.amplitude), 0.0) + conj_alpha * c.amplitude;
        sum += c.coefficient * std::exp(z - Complex(max_re, 0.0));
    }

    const double mag = std::abs(sum);
    if (mag == 0.0) {
        return {0.0, -std::numeric_limits<double>::infinity()};
    }
    const double log_q = 2.0 * (max_re + std::log(mag)) - kLnPi;
    return {std::exp(log_q), log_q};
}

double q_value(const CoherentSuperposition& state, PhasePoint point) {
    return q_value_with_log(state, point).q;
}

QDecomposition q_decompose(const CoherentSuperposition& state, PhasePoint point) {
    const auto& comps = state.components();
    const std::size_t n = comps.size();

    // Coherent terms Q_k = (1/pi) e^{-|alpha - alpha_k|^2}.
    std::vector<double> qk(n);
    double free = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        qk[k] = kInvPi * std::exp(-std::norm(point.alpha - comps[k].amplitude));
        free += std::norm(comps[k].coefficient) * qk[k];
    }

    // Cross terms 2 |c_k||c_l| sqrt(Q_k Q_l) cos(gamma_k - gamma_l + phase_kl)
    // with phase_kl = Im(conj(alpha) alpha_k + alpha conj(alpha_l)); for a
    // common-modulus circle of states this is the usual
    // 2|alpha||alpha_0| cos(phi_kl^+ + theta_0 - theta) sin(phi_kl^-).
    double interference = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < k; ++l) {
            const double phase_kl = (std::conj(point.alpha) * comps[k].amplitude +
                                     point.alpha * std::conj(comps[l].amplitude))
                                        .imag();
            const double gamma_kl =
                std::arg(comps[k].coefficient) - std::arg(comps[l].coefficient);
            interference += 2.0 * std::abs(comps[k].coefficient) * std::abs(comps[l].coefficient) *
                            std::sqrt(qk[k] * qk[l]) * std::cos(gamma_kl + phase_kl);
        }
    }

    double total = free + interference;
    if (total < -1e-14) {
        throw std::logic_error("q_decompose: negative Husimi density beyond rounding");
    }
    if (total < 0.0) total = 0.0;
    return {free, interference, total};
}

}  // namespace catphase
