#include "catphase/validation.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "catphase/closedform.hpp"
#include "catphase/husimi.hpp"
#include "catphase/quadrature.hpp"
#include "catphase/states.hpp"

namespace catphase::validation {

namespace {

constexpr double kLnPi = 1.1447298858494001741;

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

std::vector<CoherentSuperposition> sample_states() {
    std::vector<CoherentSuperposition> states;
    states.push_back(gram_normalize({{1.0, Complex(0.0, 0.0)}}));
    states.push_back(gram_normalize({{1.0, Complex(1.0, 2.0)}}));
    states.push_back(make_cat({Complex(0.8, 0.0), 0.0}));
    states.push_back(make_cat({Complex(1.2, 0.0), std::numbers::pi}));
    states.push_back(make_cat({Complex(2.4, 0.0), std::numbers::pi / 2}));
    states.push_back(make_equientropic(Complex(std::sqrt(12.0), 0.0), 3));
    states.push_back(make_kerr_state({1, 4, Complex(3.0, 0.0)}));
    return states;
}

}  // namespace

std::vector<CheckResult> run_all(double tol) {
    std::vector<CheckResult> results;
    const auto check = [&results](const std::string& name, bool ok, const std::string& detail) {
        results.push_back({name, ok, detail});
    };
    const std::vector<CoherentSuperposition> states = sample_states();

    // Every constructor output is unit-norm.
    {
        double worst = 0.0;
        for (const auto& s : states) worst = std::max(worst, std::abs(s.norm() - 1.0));
        check("constructor-unit-norm", worst <= 1e-12, "max |norm-1| = " + fmt(worst));
    }

    // make_cat(a, 0) equals make_equientropic(a, 2) component-wise.
    {
        const auto cat = make_cat({Complex(1.5, 0.5), 0.0});
        const auto equi = make_equientropic(Complex(1.5, 0.5), 2);
        double worst = 0.0;
        for (std::size_t i = 0; i < 2; ++i) {
            worst = std::max(worst, std::abs(cat.components()[i].coefficient -
                                             equi.components()[i].coefficient));
            worst = std::max(worst, std::abs(cat.components()[i].amplitude -
                                             equi.components()[i].amplitude));
        }
        check("cat-equals-equientropic-2", worst <= 1e-12, "max component diff = " + fmt(worst));
    }

    // Kerr coefficients are equimodular with |c_k|^2 = 1/N for coprime (M, N).
    {
        double worst = 0.0;
        for (int n = 2; n <= 8; ++n) {
            for (int m = 1; m <= n; ++m) {
                if (std::gcd(m, n) != 1) continue;
                const auto s = make_kerr_state({m, n, Complex(2.0, 1.0)});
                for (const auto& c : s.components()) {
                    worst = std::max(worst, std::abs(std::norm(c.coefficient) - 1.0 / n));
                }
            }
        }
        check("kerr-equal-weights", worst <= 1e-12, "max | |c|^2 - 1/N | = " + fmt(worst));
    }

    // Equientropic weights solve the entropic equation and decrease in N.
    {
        double worst = 0.0;
        double prev = 1.0;
        bool decreasing = true;
        for (int n = 2; n <= 10; ++n) {
            const double x = solve_equientropic_weight(n);
            const double k = n - 1.0;
            const double entropy = -(1.0 - k * x) * std::log(1.0 - k * x) - k * x * std::log(x);
            worst = std::max(worst, std::abs(entropy - std::numbers::ln2));
            decreasing = decreasing && x < prev;
            prev = x;
        }
        check("equientropic-weight-equation", worst <= 1e-10 && decreasing,
              "max residual = " + fmt(worst));
    }

    // Husimi bound 0 <= Q <= 1/pi on random points of every sample state.
    {
        std::mt19937_64 rng(20010409);
        std::uniform_real_distribution<double> coord(-6.0, 6.0);
        double worst = 0.0;
        for (const auto& s : states) {
            for (int i = 0; i < 200; ++i) {
                const double q = q_value(s, PhasePoint(Complex(coord(rng), coord(rng))));
                worst = std::max(worst, std::max(-q, q - 1.0 / std::numbers::pi));
            }
        }
        check("husimi-bound", worst <= 1e-14, "max excursion = " + fmt(worst));
    }

    // Free + interference decomposition agrees with the direct evaluation.
    {
        std::mt19937_64 rng(42);
        std::uniform_real_distribution<double> coord(-5.0, 5.0);
        double worst = 0.0;
        for (const auto& s : states) {
            for (int i = 0; i < 200; ++i) {
                const PhasePoint p(Complex(coord(rng), coord(rng)));
                worst = std::max(worst, std::abs(q_decompose(s, p).total - q_value(s, p)));
            }
        }
        check("decomposition-total", worst <= 1e-12, "max |total - Q| = " + fmt(worst));
    }

    // Q is invariant under a global coefficient phase and covariant under
    // phase-plane rotation.
    {
        double worst = 0.0;
        const Complex u = std::polar(1.0, 0.7331);
        for (const auto& s : states) {
            std::vector<Component> comps = s.components();
            for (auto& c : comps) c.coefficient *= u;
            const auto phased = gram_normalize(comps);
            const auto spun = rotated(s, 1.234);
            for (int i = 0; i < 64; ++i) {
                const PhasePoint p(std::polar(0.3 + 0.1 * i, 0.37 * i));
                worst = std::max(worst, std::abs(q_value(phased, p) - q_value(s, p)));
                const PhasePoint back(p.alpha * std::polar(1.0, -1.234));
                worst = std::max(worst, std::abs(q_value(spun, p) - q_value(s, back)));
            }
        }
        check("phase-and-rotation-covariance", worst <= 1e-12, "max diff = " + fmt(worst));
    }

    // Quadrature-backed checks share one rule per state.
    {
        double worst_norm = 0.0;
        double worst_floor = 0.0;
        double worst_tensor = 0.0;
        for (const auto& s : states) {
            const PolarQuadrature quad = default_quadrature(s, tol);
            const PhaseProfile pd = husimi_pd(s, quad);
            worst_norm = std::max(worst_norm, std::abs(pd.integral - 1.0));
            const EntropyReport report = wehrl_entropy(s, quad, tol);
            worst_floor = std::max(worst_floor, (1.0 + kLnPi) - report.wehrl_entropy);
            const double tensor = wehrl_entropy_tensor(s, quad);
            worst_tensor = std::max(worst_tensor, std::abs(tensor - wehrl_pd(s, quad).integral));
        }
        check("husimi-pd-normalization", worst_norm <= tol, "max |integral-1| = " + fmt(worst_norm));
        check("lieb-floor", worst_floor <= tol, "max floor excess = " + fmt(worst_floor));
        check("entropy-tensor-consistency", worst_tensor <= 10.0 * tol,
              "max |profile - tensor| = " + fmt(worst_tensor));
    }

    // Entropy is rotation invariant.
    {
        const auto s = make_cat({Complex(1.2, 0.0), 0.0});
        const auto spun = rotated(s, 0.9);
        const PolarQuadrature quad = default_quadrature(s, tol);
        const double a = wehrl_entropy(s, quad, tol).wehrl_entropy;
        const double b = wehrl_entropy(spun, quad, tol).wehrl_entropy;
        check("entropy-rotation-invariance", std::abs(a - b) <= 10.0 * tol,
              "|S(rotated) - S| = " + fmt(std::abs(a - b)));
    }

    // Closed-form reconstruction: wehrl = f2*gauss + f1*drift on top of
    // husimi = gauss + drift, and the f1-weighted bound.
    {
        double worst = 0.0;
        for (double a0 : {0.0, 0.5, 1.0, 2.4, std::sqrt(12.0)}) {
            for (int i = 0; i < 256; ++i) {
                const CoherentPDParams p{Complex(a0, 0.0), 2.0 * std::numbers::pi * i / 256};
                const CoherentPDTerms t = coherent_pd_terms(p);
                worst = std::max(worst, std::abs(coherent_husimi_pd(p) - (t.gauss + t.drift)));
                worst = std::max(worst,
                                 std::abs(coherent_wehrl_pd(p) - (t.f2 * t.gauss + t.f1 * t.drift)));
                if (t.f1 > 0.0 && t.f2 > 0.0) {
                    const double slack = coherent_wehrl_pd(p) - t.f1 * coherent_husimi_pd(p);
                    worst = std::max(worst, -slack);
                }
            }
        }
        check("closedform-reconstruction", worst <= 1e-15, "max violation = " + fmt(worst));
    }

    // Closed forms against quadrature for a single coherent state.
    {
        const auto s = gram_normalize({{1.0, Complex(std::sqrt(12.0), 0.0)}});
        const PolarQuadrature quad = default_quadrature(s, tol);
        const PhaseProfile wpd = wehrl_pd(s, quad);
        const PhaseProfile hpd = husimi_pd(s, quad);
        double worst = 0.0;
        for (std::size_t i = 0; i < wpd.thetas.size(); ++i) {
            const CoherentPDParams p{Complex(std::sqrt(12.0), 0.0), wpd.thetas[i]};
            worst = std::max(worst, std::abs(wpd.values[i] - coherent_wehrl_pd(p)));
            worst = std::max(worst, std::abs(hpd.values[i] - coherent_husimi_pd(p)));
        }
        check("closedform-vs-quadrature", worst <= 1e-6, "max pointwise diff = " + fmt(worst));
    }

    return results;
}

}  // namespace catphase::validation
