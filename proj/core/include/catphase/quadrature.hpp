#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "catphase/husimi.hpp"

namespace catphase {

struct RadialNode {
    double r;
    double w;
};

/// Gauss-Legendre nodes and weights on [a, b].
std::vector<RadialNode> gauss_legendre(int count, double a, double b);

/// Deterministic pairwise summation; independent of thread count because it
/// always runs over a fully materialized array in a fixed order.
double pairwise_sum(std::span<const double> values);

/// Product rule for the phase plane: Gauss-Legendre nodes on [0, R_max] times
/// a uniform periodic theta grid of even size (trapezoid weights 2pi/n).
class PolarQuadrature {
  public:
    PolarQuadrature(std::vector<RadialNode> radial_nodes, int theta_count, double r_max);

    static PolarQuadrature product_rule(int radial_count, int theta_count, double r_max);

    const std::vector<RadialNode>& radial_nodes() const { return radial_; }
    int theta_count() const { return theta_count_; }
    double r_max() const { return r_max_; }

    double theta(int i) const;
    double theta_weight() const;  // 2pi / theta_count

    /// Same domain with twice the radial nodes and twice the theta nodes.
    PolarQuadrature doubled() const;

  private:
    std::vector<RadialNode> radial_;
    int theta_count_;
    double r_max_;
};

enum class ProfileKind { WehrlPD, HusimiPD };

/// Distribution over theta in [0, 2pi), sampled on the quadrature's grid.
/// integral is the trapezoidal theta-integral of values.
struct PhaseProfile {
    std::vector<double> thetas;
    std::vector<double> values;
    ProfileKind kind;
    double integral;
};

struct EntropyReport {
    double wehrl_entropy;
    double error_estimate;  // |S(grid) - S(doubled grid)|
    std::optional<PhaseProfile> profile;
};

/// Caps the number of worker threads for quadrature rows. 0 restores the
/// hardware default. Results are identical for every setting.
void set_max_threads(unsigned count);
unsigned max_threads();

/// Quadrature sized for `state`: R_max = max_k |alpha_k| + sqrt(ln 1/tol) + 2
/// (the coherent peaks have unit Gaussian width), with node counts grown
/// until the entropy's grid-doubling estimate drops below tol.
PolarQuadrature default_quadrature(const CoherentSuperposition& state, double tol);

/// Wehrl phase distribution: radial integral of -Q ln Q at each grid theta.
/// Integrand contributions vanish exactly wherever Q < 1e-300.
PhaseProfile wehrl_pd(const CoherentSuperposition& state, const PolarQuadrature& quad);

/// Husimi phase distribution: radial integral of Q at each grid theta.
PhaseProfile husimi_pd(const CoherentSuperposition& state, const PolarQuadrature& quad);

/// Wehrl entropy as the theta-integral of the Wehrl PD. The reported value
/// comes from the doubled grid; error_estimate is the doubling difference;
/// profile is sampled on the given grid. Throws NonConvergedError when the
/// doubling difference exceeds 10 * tol (R_max or node counts too small).
EntropyReport wehrl_entropy(const CoherentSuperposition& state, const PolarQuadrature& quad,
                            double tol = 1e-8);

/// Same integral accumulated in one pass over the full 2-D tensor grid, as a
/// cross-check of the per-theta reduction.
double wehrl_entropy_tensor(const CoherentSuperposition& state, const PolarQuadrature& quad);

/// Wehrl entropy of the cat |alpha0, gamma> for each gamma in `gammas`.
std::vector<std::pair<double, double>> gamma_scan(Complex alpha0, const std::vector<double>& gammas,
                                                  const PolarQuadrature& quad, double tol = 1e-8);

}  // namespace catphase
