#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace catphase {

using Complex = std::complex<double>;

/// Overlap <a|b> of two coherent states.
Complex coherent_overlap(Complex a, Complex b);

/// Exponent of the overlap: log<a|b> = -|a|^2/2 - |b|^2/2 + conj(a) b.
Complex log_coherent_overlap(Complex a, Complex b);

/// One term c_k |alpha_k> of a superposition.
struct Component {
    Complex coefficient;
    Complex amplitude;
};

/// Normalized superposition of coherent states, sum_k c_k |alpha_k>.
///
/// Instances always satisfy <psi|psi> = 1 up to rounding; they can only be
/// built through gram_normalize() or one of the make_* constructors below.
class CoherentSuperposition {
  public:
    const std::vector<Component>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }

    /// max_k |alpha_k|; sets the radial extent of the Husimi function.
    double max_amplitude() const;

    /// sqrt(sum_kl conj(c_k) c_l <alpha_k|alpha_l>); equals 1 up to rounding.
    double norm() const;

  private:
    explicit CoherentSuperposition(std::vector<Component> components)
        : components_(std::move(components)) {}
    friend CoherentSuperposition gram_normalize(std::vector<Component> components);

    std::vector<Component> components_;
};

/// Gram-weighted norm of an arbitrary component list.
double gram_norm(const std::vector<Component>& components);

/// Scales coefficients by the inverse Gram norm, preserving their ratios.
/// Components whose amplitudes lie within 1e-12 of each other are merged by
/// coefficient addition first, so the Gram matrix stays well conditioned.
/// Throws ZeroNormError when the norm falls below 1e-15.
CoherentSuperposition gram_normalize(std::vector<Component> components);

/// Two-component cat |alpha0, gamma> ~ |alpha0> + e^{i gamma} |-alpha0>.
/// gamma = 0 is the even state, pi the odd state, pi/2 the Yurke-Stoler state.
struct CatParameters {
    Complex alpha0;
    double gamma;  // reduced to [0, 2pi)

    CatParameters(Complex alpha0_, double gamma_);
};

CoherentSuperposition make_cat(const CatParameters& p);

/// Weight x_N of the N-component equientropic superposition: the root of
/// 2 (1-(N-1)x)^(1-(N-1)x) x^((N-1)x) = 1 located in (0, 1/N] by bisection.
/// Equivalently the weights {1-(N-1)x, x, ..., x} carry Shannon entropy ln 2.
double solve_equientropic_weight(int n);

/// N components on the circle of radius |alpha0|, first weight
/// sqrt(1-(N-1)x_N) and the rest sqrt(x_N), Gram-normalized. Well-separated
/// instances all share the Wehrl entropy 1 + ln(2 pi).
CoherentSuperposition make_equientropic(Complex alpha0, int n);

/// Rational Kerr evolution time g t = 2 pi M/N acting on |alpha0>.
/// M and N must be positive and mutually prime.
struct KerrSchedule {
    int m;
    int n;
    Complex alpha0;

    KerrSchedule(int m_, int n_, Complex alpha0_);
};

/// The N-component superposition a Kerr medium produces at gt = 2 pi M/N:
/// amplitudes e^{i phi_k} alpha0 with phi_k = (2k+N-3) pi/N and coefficients
/// c_k = (1/N) sum_n exp{i n [(M/N) pi (n-1) - phi_k]}. Unit norm.
CoherentSuperposition make_kerr_state(const KerrSchedule& s);

/// Largest number of components that remain well separated at amplitude
/// |alpha0|: the integer part of pi |alpha0| / sqrt(2).
int n_max(Complex alpha0);

/// Same state rotated in the phase plane: alpha_k -> e^{i phase} alpha_k.
CoherentSuperposition rotated(const CoherentSuperposition& state, double phase);

}  // namespace catphase
