#include "catphase/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "catphase/errors.hpp"

namespace catphase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLnPi = 1.1447298858494001741;
constexpr double kQFloor = 1e-300;  // below this, Q ln Q contributes exactly 0

std::atomic<unsigned> g_max_threads{0};

unsigned effective_threads(std::size_t rows) {
    unsigned cap = g_max_threads.load(std::memory_order_relaxed);
    if (cap == 0) cap = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(cap, rows));
}

// Runs fn(i) for i in [0, rows), partitioned into contiguous blocks. Each row
// is computed by exactly one thread, so results do not depend on the split.
template <typename Fn>
void parallel_rows(std::size_t rows, Fn&& fn) {
    const unsigned nthreads = effective_threads(rows);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < rows; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(nthreads);
    const std::size_t chunk = (rows + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(rows, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& w : workers) w.join();
}

double radial_row(const CoherentSuperposition& state, const PolarQuadrature& quad, double theta,
                  ProfileKind kind, std::vector<double>& scratch) {
    const auto& nodes = quad.radial_nodes();
    scratch.clear();
    const Complex dir = std::polar(1.0, theta);
    for (const auto& node : nodes) {
        const QValue v = q_value_with_log(state, PhasePoint(node.r * dir));
        double f;
        if (kind == ProfileKind::WehrlPD) {
            f = v.q >= kQFloor ? -v.q * v.log_q : 0.0;
        } else {
            f = v.q;
        }
        scratch.push_back(node.w * node.r * f);
    }
    return pairwise_sum(scratch);
}

PhaseProfile profile_of(const CoherentSuperposition& state, const PolarQuadrature& quad,
                        ProfileKind kind) {
    const int n = quad.theta_count();
    PhaseProfile profile;
    profile.kind = kind;
    profile.thetas.resize(n);
    profile.values.resize(n);
    for (int i = 0; i < n; ++i) profile.thetas[i] = quad.theta(i);

    parallel_rows(static_cast<std::size_t>(n), [&](std::size_t i) {
        thread_local std::vector<double> scratch;
        profile.values[i] = radial_row(state, quad, profile.thetas[i], kind, scratch);
    });

    profile.integral = pairwise_sum(profile.values) * quad.theta_weight();
    return profile;
}

double entropy_sum(const CoherentSuperposition& state, const PolarQuadrature& quad) {
    return profile_of(state, quad, ProfileKind::WehrlPD).integral;
}

}  // namespace

std::vector<RadialNode> gauss_legendre(int count, double a, double b) {
    if (count < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    if (!(b > a)) throw std::invalid_argument("gauss_legendre: empty interval");

    std::vector<RadialNode> nodes(static_cast<std::size_t>(count));
    const int m = (count + 1) / 2;
    const double mid = 0.5 * (b + a);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev estimate of the i-th root.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < count; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2 * j + 1) * z * p2 - j * p3) / (j + 1);
            }
            pp = count * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        nodes[static_cast<std::size_t>(i)] = {mid - half * z, 2.0 * half / ((1.0 - z * z) * pp * pp)};
        nodes[static_cast<std::size_t>(count - 1 - i)] = {mid + half * z,
                                                          nodes[static_cast<std::size_t>(i)].w};
    }
    return nodes;
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 16) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t mid = values.size() / 2;
    return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

PolarQuadrature::PolarQuadrature(std::vector<RadialNode> radial_nodes, int theta_count, double r_max)
    : radial_(std::move(radial_nodes)), theta_count_(theta_count), r_max_(r_max) {
    if (radial_.empty()) throw std::invalid_argument("PolarQuadrature: no radial nodes");
    if (theta_count_ < 8 || theta_count_ % 2 != 0) {
        throw std::invalid_argument("PolarQuadrature: theta_count must be even and >= 8");
    }
    if (!(r_max_ > 0.0)) throw std::invalid_argument("PolarQuadrature: R_max must be positive");

    std::vector<double> ws;
    ws.reserve(radial_.size());
    double prev = -1.0;
    for (const auto& node : radial_) {
        if (!(node.w > 0.0) || node.r < 0.0 || node.r <= prev) {
            throw std::invalid_argument("PolarQuadrature: radial nodes must be increasing with positive weights");
        }
        prev = node.r;
        ws.push_back(node.w);
    }
    if (std::abs(pairwise_sum(ws) - r_max_) > 1e-12) {
        throw std::invalid_argument("PolarQuadrature: radial weights must sum to R_max");
    }
}

PolarQuadrature PolarQuadrature::product_rule(int radial_count, int theta_count, double r_max) {
    return PolarQuadrature(gauss_legendre(radial_count, 0.0, r_max), theta_count, r_max);
}

double PolarQuadrature::theta(int i) const {
    return kTwoPi * static_cast<double>(i) / static_cast<double>(theta_count_);
}

double PolarQuadrature::theta_weight() const {
    return kTwoPi / static_cast<double>(theta_count_);
}

PolarQuadrature PolarQuadrature::doubled() const {
    return product_rule(static_cast<int>(radial_.size()) * 2, theta_count_ * 2, r_max_);
}

void set_max_threads(unsigned count) {
    g_max_threads.store(count, std::memory_order_relaxed);
}

unsigned max_threads() {
    return g_max_threads.load(std::memory_order_relaxed);
}

PolarQuadrature default_quadrature(const CoherentSuperposition& state, double tol) {
    if (!(tol >= 1e-12 && tol <= 1e-3)) {
        throw std::invalid_argument("default_quadrature: tol must lie in [1e-12, 1e-3]");
    }
    const double amp = state.max_amplitude();
    const double r_max = amp + std::sqrt(std::log(1.0 / tol)) + 2.0;

    // Initial theta count tracks the interference oscillation scale
    // 2 |alpha| |alpha_0|; the doubling loop below catches anything the
    // estimate misses.
    int theta_count = 64;
    while (theta_count < 5.0 * r_max * amp && theta_count < 16384) theta_count *= 2;
    int radial_count = 64;

    double coarse = entropy_sum(state, PolarQuadrature::product_rule(radial_count, theta_count, r_max));
    while (radial_count <= 2048) {
        const double fine =
            entropy_sum(state, PolarQuadrature::product_rule(2 * radial_count, 2 * theta_count, r_max));
        if (std::abs(fine - coarse) <= tol) break;
        radial_count *= 2;
        theta_count *= 2;
        coarse = fine;
    }
    return PolarQuadrature::product_rule(radial_count, theta_count, r_max);
}

PhaseProfile wehrl_pd(const CoherentSuperposition& state, const PolarQuadrature& quad) {
    return profile_of(state, quad, ProfileKind::WehrlPD);
}

PhaseProfile husimi_pd(const CoherentSuperposition& state, const PolarQuadrature& quad) {
    return profile_of(state, quad, ProfileKind::HusimiPD);
}

EntropyReport wehrl_entropy(const CoherentSuperposition& state, const PolarQuadrature& quad,
                            double tol) {
    PhaseProfile profile = profile_of(state, quad, ProfileKind::WehrlPD);
    const double fine = entropy_sum(state, quad.doubled());
    const double error = std::abs(fine - profile.integral);
    if (error > 10.0 * tol) {
        throw NonConvergedError("wehrl_entropy: grid doubling moved the result by more than 10*tol");
    }
    if (fine < 1.0 + kLnPi - error - 1e-12) {
        throw NonConvergedError("wehrl_entropy: result fell below the coherent-state minimum");
    }
    return {fine, error, std::move(profile)};
}

double wehrl_entropy_tensor(const CoherentSuperposition& state, const PolarQuadrature& quad) {
    const int n = quad.theta_count();
    const auto& nodes = quad.radial_nodes();
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(n) * nodes.size());
    for (int i = 0; i < n; ++i) {
        const Complex dir = std::polar(1.0, quad.theta(i));
        for (const auto& node : nodes) {
            const QValue v = q_value_with_log(state, PhasePoint(node.r * dir));
            terms.push_back(v.q >= kQFloor ? -node.w * node.r * v.q * v.log_q : 0.0);
        }
    }
    return pairwise_sum(terms) * quad.theta_weight();
}

std::vector<std::pair<double, double>> gamma_scan(Complex alpha0, const std::vector<double>& gammas,
                                                  const PolarQuadrature& quad, double tol) {
    std::vector<std::pair<double, double>> result;
    result.reserve(gammas.size());
    for (double gamma : gammas) {
        const CoherentSuperposition cat = make_cat(CatParameters(alpha0, gamma));
        result.emplace_back(gamma, wehrl_entropy(cat, quad, tol).wehrl_entropy);
    }
    return result;
}

}  // namespace catphase
