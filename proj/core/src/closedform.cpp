#include "catphase/closedform.hpp"

#include <cmath>
#include <numbers>

#include "catphase/errors.hpp"

namespace catphase {

namespace {
constexpr double kLnPi = 1.1447298858494001741;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;
}  // namespace

double erf(double x) {
    return std::erf(x);
}

double erfcx(double x) {
    if (x <= 26.0) {
        // Both factors are representable up to here.
        return std::exp(x * x) * std::erfc(x);
    }
    // Asymptotic tail; the truncation error is below double precision.
    const double y2 = 1.0 / (x * x);
    return (1.0 - 0.5 * y2 * (1.0 - 1.5 * y2 * (1.0 - 2.5 * y2))) / (kSqrtPi * x);
}

CoherentPDTerms coherent_pd_terms(const CoherentPDParams& p) {
    const double x0 = std::abs(p.alpha0);
    const double theta0 = x0 > 0.0 ? std::arg(p.alpha0) : 0.0;
    const double x = x0 * std::cos(p.theta - theta0);

    // e^{X^2-X0^2} e^{-X^2} collapses to e^{-X0^2}; the drift term keeps the
    // bounded product e^{X^2-X0^2} (1 + erf X), rewritten through erfcx for
    // X < 0 where 1 + erf X underflows.
    const double gauss = std::exp(-x0 * x0) / kTwoPi;
    double drift;
    if (x >= 0.0) {
        drift = kSqrtPi * x * std::exp(x * x - x0 * x0) * (1.0 + std::erf(x)) / kTwoPi;
    } else {
        drift = kSqrtPi * x * std::exp(-x0 * x0) * erfcx(-x) / kTwoPi;
    }

    const double d2 = x0 * x0 - x * x;
    return {gauss, drift, d2 + kLnPi + 0.5, d2 + kLnPi + 1.0};
}

double coherent_wehrl_pd(const CoherentPDParams& p) {
    const CoherentPDTerms t = coherent_pd_terms(p);
    return t.f2 * t.gauss + t.f1 * t.drift;
}

double coherent_husimi_pd(const CoherentPDParams& p) {
    const CoherentPDTerms t = coherent_pd_terms(p);
    return t.gauss + t.drift;
}

double approx_cat_wehrl_pd(Complex alpha0, double theta) {
    const double s = coherent_wehrl_pd({alpha0, theta}) + coherent_wehrl_pd({-alpha0, theta});
    const double p = coherent_husimi_pd({alpha0, theta}) + coherent_husimi_pd({-alpha0, theta});
    return 0.5 * (s + std::numbers::ln2 * p);
}

double approx_kitten_wehrl_pd(const CoherentSuperposition& state, double theta) {
    const auto& comps = state.components();
    double lo = std::abs(comps.front().amplitude);
    double hi = lo;
    for (const auto& c : comps) {
        const double m = std::abs(c.amplitude);
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    if (hi - lo > 1e-9) {
        throw MixedModuliError("approx_kitten_wehrl_pd: amplitudes are not on a common circle");
    }

    double value = 0.0;
    for (const auto& c : comps) {
        const double w = std::norm(c.coefficient);
        value += w * coherent_wehrl_pd({c.amplitude, theta});
        if (w > 0.0) value -= w * std::log(w) * coherent_husimi_pd({c.amplitude, theta});
    }
    return value;
}

double approx_wehrl_entropy(const std::vector<double>& weights) {
    double sum = 0.0;
    double shannon = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw BadWeightsError("approx_wehrl_entropy: negative weight");
        sum += w;
        if (w > 0.0) shannon -= w * std::log(w);
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw BadWeightsError("approx_wehrl_entropy: weights do not sum to 1");
    }
    return 1.0 + kLnPi + shannon;
}

}  // namespace catphase
