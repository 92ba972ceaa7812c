#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "catphase/closedform.hpp"
#include "catphase/errors.hpp"
#include "catphase/quadrature.hpp"
#include "catphase/states.hpp"
#include "oracles.hpp"

using namespace catphase;
using oracle::Complex;

namespace {
const double kSqrt12 = std::sqrt(12.0);

CoherentSuperposition coherent(Complex alpha0) {
    return gram_normalize({{1.0, alpha0}});
}
}  // namespace

TEST_CASE("gauss_legendre integrates polynomials exactly") {
    const auto nodes = gauss_legendre(8, 0.0, 3.0);
    REQUIRE(nodes.size() == 8);
    double prev = -1.0;
    std::vector<double> weights;
    for (const auto& n : nodes) {
        CHECK(n.r > prev);
        CHECK(n.r < 3.0);
        CHECK(n.w > 0.0);
        prev = n.r;
        weights.push_back(n.w);
    }
    CHECK(pairwise_sum(weights) == doctest::Approx(3.0).epsilon(1e-15));
    // degree 15 is the highest an 8-point rule must integrate exactly
    for (int degree : {0, 3, 7, 12, 15}) {
        double sum = 0.0;
        for (const auto& n : nodes) sum += n.w * std::pow(n.r, degree);
        const double exact = std::pow(3.0, degree + 1) / (degree + 1);
        CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
    }
    CHECK_THROWS_AS(gauss_legendre(0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_legendre(4, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("pairwise_sum matches sequential summation") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> values(1537);
    long double exact = 0.0;
    for (auto& v : values) {
        v = u(rng);
        exact += v;
    }
    CHECK(pairwise_sum(values) == doctest::Approx(static_cast<double>(exact)).epsilon(1e-14));
    CHECK(pairwise_sum(std::span<const double>{}) == 0.0);
}

TEST_CASE("PolarQuadrature validates its invariants") {
    CHECK_THROWS_AS(PolarQuadrature::product_rule(16, 7, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(PolarQuadrature::product_rule(16, 9, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(PolarQuadrature::product_rule(16, 16, -1.0), std::invalid_argument);
    CHECK_NOTHROW(PolarQuadrature::product_rule(16, 10, 5.0));  // even but not a power of two
    // weights that do not sum to R_max are rejected
    auto nodes = gauss_legendre(16, 0.0, 5.0);
    nodes[3].w *= 1.5;
    CHECK_THROWS_AS(PolarQuadrature(nodes, 16, 5.0), std::invalid_argument);

    const auto quad = PolarQuadrature::product_rule(32, 64, 5.0);
    CHECK(quad.theta(0) == 0.0);
    CHECK(quad.theta(16) == doctest::Approx(std::numbers::pi / 2));
    CHECK(quad.theta_weight() == doctest::Approx(2.0 * std::numbers::pi / 64));
    const auto fine = quad.doubled();
    CHECK(fine.radial_nodes().size() == 64);
    CHECK(fine.theta_count() == 128);
    CHECK(fine.r_max() == 5.0);
}

TEST_CASE("default_quadrature sizes the domain from the state and tol") {
    const auto vac = default_quadrature(coherent(Complex(0.0, 0.0)), 1e-10);
    CHECK(vac.r_max() == doctest::Approx(std::sqrt(std::log(1e10)) + 2.0).epsilon(1e-12));

    const auto cat = make_cat({Complex(kSqrt12, 0.0), 0.0});
    const auto quad = default_quadrature(cat, 1e-8);
    CHECK(quad.r_max() ==
          doctest::Approx(kSqrt12 + std::sqrt(std::log(1e8)) + 2.0).epsilon(1e-12));

    // theta resolution is floored at least linearly in the amplitude
    // (adaptive refinement may push individual states higher)
    for (double a0 : {2.0, 4.0}) {
        const auto q = default_quadrature(make_cat({Complex(a0, 0.0), 0.0}), 1e-8);
        CHECK(q.theta_count() >= 5.0 * q.r_max() * a0);
    }

    CHECK_THROWS_AS(default_quadrature(cat, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(default_quadrature(cat, 1e-13), std::invalid_argument);
}

TEST_CASE("vacuum profiles are flat") {
    const auto vac = coherent(Complex(0.0, 0.0));
    const auto quad = default_quadrature(vac, 1e-10);
    const PhaseProfile wpd = wehrl_pd(vac, quad);
    const PhaseProfile hpd = husimi_pd(vac, quad);
    REQUIRE(wpd.kind == ProfileKind::WehrlPD);
    REQUIRE(hpd.kind == ProfileKind::HusimiPD);
    for (std::size_t i = 0; i < wpd.values.size(); ++i) {
        CHECK(wpd.values[i] == doctest::Approx(oracle::kVacuumWehrlPD).epsilon(1e-11));
        CHECK(hpd.values[i] ==
              doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-12));
    }
    CHECK(wpd.integral == doctest::Approx(oracle::kLnPi1).epsilon(1e-10));
    CHECK(hpd.integral == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("profile integral field equals the trapezoid sum of its values") {
    const auto cat = make_cat({Complex(1.5, 0.0), 0.9});
    const auto quad = default_quadrature(cat, 1e-8);
    for (const auto& profile : {wehrl_pd(cat, quad), husimi_pd(cat, quad)}) {
        double sum = 0.0;
        for (double v : profile.values) sum += v;
        sum *= 2.0 * std::numbers::pi / profile.values.size();
        CHECK(std::abs(profile.integral - sum) < 1e-12);
        REQUIRE(profile.thetas.size() == profile.values.size());
        CHECK(profile.thetas[1] - profile.thetas[0] ==
              doctest::Approx(2.0 * std::numbers::pi / profile.values.size()));
    }
}

TEST_CASE("coherent-state profiles match the closed forms") {
    for (double a0 : {1.0, kSqrt12}) {
        const auto state = coherent(Complex(a0, 0.0));
        const auto quad = default_quadrature(state, 1e-8);
        const PhaseProfile wpd = wehrl_pd(state, quad);
        const PhaseProfile hpd = husimi_pd(state, quad);
        double worst_w = 0.0;
        double worst_h = 0.0;
        for (std::size_t i = 0; i < wpd.thetas.size(); ++i) {
            worst_w = std::max(worst_w, std::abs(wpd.values[i] -
                                                 coherent_wehrl_pd({Complex(a0, 0.0), wpd.thetas[i]})));
            worst_h = std::max(worst_h, std::abs(hpd.values[i] -
                                                 coherent_husimi_pd({Complex(a0, 0.0), hpd.thetas[i]})));
        }
        CHECK(worst_w < 1e-8);
        CHECK(worst_h < 1e-10);
        // the peak sits on the grid at theta = 0
        if (a0 == kSqrt12) {
            CHECK(wpd.values[0] == doctest::Approx(oracle::kWehrlPeakSqrt12).epsilon(1e-10));
        }
    }
}

TEST_CASE("even cat at |alpha0|^2 = 12: two peaks and the entropy deficit") {
    const auto cat = make_cat({Complex(kSqrt12, 0.0), 0.0});
    const auto quad = default_quadrature(cat, 1e-8);
    const PhaseProfile wpd = wehrl_pd(cat, quad);
    const std::size_t n = wpd.values.size();
    std::size_t argmax = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (wpd.values[i] > wpd.values[argmax]) argmax = i;
    }
    CHECK((argmax == 0 || argmax == n / 2));
    CHECK(wpd.values[0] == doctest::Approx(wpd.values[n / 2]).epsilon(1e-12));

    const double eps = oracle::kLn2Pi1 - wpd.integral;
    CHECK(eps > 0.0);
    CHECK(eps < 2e-6);
}

TEST_CASE("wehrl_entropy") {
    SUBCASE("coherent states sit on the floor 1 + ln pi") {
        for (const Complex a0 : {Complex(0.0, 0.0), Complex(1.0, 2.0), Complex(kSqrt12, 0.0)}) {
            const auto report = wehrl_entropy(coherent(a0), default_quadrature(coherent(a0), 1e-8));
            CHECK(std::abs(report.wehrl_entropy - oracle::kLnPi1) < 1e-7);
            CHECK(report.error_estimate < 1e-8);
            REQUIRE(report.profile.has_value());
            CHECK(report.profile->kind == ProfileKind::WehrlPD);
        }
    }
    SUBCASE("equientropic N = 3 deficit stays inside the bound") {
        const auto state = make_equientropic(Complex(kSqrt12, 0.0), 3);
        const auto report = wehrl_entropy(state, default_quadrature(state, 1e-8));
        const double eps = oracle::kLn2Pi1 - report.wehrl_entropy;
        CHECK(eps > 0.0);
        CHECK(eps < 6.5e-5);
    }
    SUBCASE("doubling moves the result by no more than the error estimate") {
        const auto cat = make_cat({Complex(1.3, 0.0), 0.4});
        const auto quad = default_quadrature(cat, 1e-8);
        const auto report = wehrl_entropy(cat, quad);
        const auto finer = wehrl_entropy(cat, quad.doubled());
        CHECK(std::abs(finer.wehrl_entropy - report.wehrl_entropy) <= report.error_estimate);
    }
    SUBCASE("an undersized domain raises NonConverged") {
        const auto cat = make_cat({Complex(kSqrt12, 0.0), 0.0});
        CHECK_THROWS_AS(wehrl_entropy(cat, PolarQuadrature::product_rule(16, 16, 2.0), 1e-8),
                        NonConvergedError);
    }
}

TEST_CASE("remote padding leaves profiles unchanged") {
    // underflow region contributes exactly zero, so a much larger domain
    // reproduces the same distribution up to quadrature error
    const auto state = coherent(Complex(1.0, 0.0));
    const auto base = default_quadrature(state, 1e-8);
    const auto padded = PolarQuadrature::product_rule(
        static_cast<int>(base.radial_nodes().size()) * 8, base.theta_count(), 40.0);
    const PhaseProfile a = wehrl_pd(state, base);
    const PhaseProfile b = wehrl_pd(state, padded);
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        CHECK(std::abs(a.values[i] - b.values[i]) < 1e-8);
    }
    CHECK(std::abs(a.integral - b.integral) < 1e-8);
}

TEST_CASE("profiles are bitwise independent of the thread count") {
    const auto state = make_kerr_state({1, 5, Complex(3.0, 0.0)});
    const auto quad = PolarQuadrature::product_rule(96, 256, 9.0);
    set_max_threads(1);
    const PhaseProfile serial = wehrl_pd(state, quad);
    set_max_threads(7);
    const PhaseProfile threaded = wehrl_pd(state, quad);
    set_max_threads(0);
    REQUIRE(serial.values.size() == threaded.values.size());
    for (std::size_t i = 0; i < serial.values.size(); ++i) {
        CHECK(serial.values[i] == threaded.values[i]);
    }
    CHECK(serial.integral == threaded.integral);
}

TEST_CASE("entropy is rotation invariant and profiles shift") {
    const auto cat = make_cat({Complex(1.2, 0.0), 0.0});
    const auto quad = default_quadrature(cat, 1e-8);
    const int n = quad.theta_count();
    const int shift = n / 8;
    const double phi = 2.0 * std::numbers::pi * shift / n;
    const auto spun = rotated(cat, phi);

    const PhaseProfile base = wehrl_pd(cat, quad);
    const PhaseProfile moved = wehrl_pd(spun, quad);
    for (int i = 0; i < n; ++i) {
        CHECK(std::abs(moved.values[(i + shift) % n] - base.values[i]) < 1e-11);
    }
    const double s0 = wehrl_entropy(cat, quad).wehrl_entropy;
    const double s1 = wehrl_entropy(spun, quad).wehrl_entropy;
    CHECK(std::abs(s0 - s1) < 1e-7);
}

TEST_CASE("tensor-grid entropy agrees with the profile reduction") {
    const auto states = {make_cat({Complex(1.5, 0.0), std::numbers::pi / 2}),
                         make_kerr_state({1, 3, Complex(2.0, 0.0)})};
    for (const auto& state : states) {
        const auto quad = default_quadrature(state, 1e-8);
        CHECK(std::abs(wehrl_entropy_tensor(state, quad) - wehrl_pd(state, quad).integral) < 1e-10);
    }
}

TEST_CASE("husimi_pd normalizes to 1 for assorted states") {
    const auto states = {make_cat({Complex(0.8, 0.0), std::numbers::pi}),
                         make_equientropic(Complex(kSqrt12, 0.0), 4),
                         make_kerr_state({1, 4, Complex(std::numbers::sqrt2, 0.0)})};
    for (const auto& state : states) {
        const auto quad = default_quadrature(state, 1e-8);
        CHECK(std::abs(husimi_pd(state, quad).integral - 1.0) < 1e-8);
    }
}

TEST_CASE("gamma_scan is symmetric about gamma = pi for real amplitudes") {
    const Complex a0(0.8, 0.0);
    const auto quad = default_quadrature(make_cat({a0, 0.0}), 1e-8);
    std::vector<double> gammas;
    for (int i = 1; i < 8; ++i) gammas.push_back(2.0 * std::numbers::pi * i / 16.0);
    for (int i = 1; i < 8; ++i) gammas.push_back(2.0 * std::numbers::pi - gammas[i - 1]);
    const auto scan = gamma_scan(a0, gammas, quad);
    REQUIRE(scan.size() == gammas.size());
    for (int i = 0; i < 7; ++i) {
        CHECK(scan[i].first == gammas[i]);
        CHECK(std::abs(scan[i].second - scan[i + 7].second) < 1e-9);
    }
}
