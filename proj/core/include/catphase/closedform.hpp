#pragma once

#include <vector>

#include "catphase/states.hpp"

namespace catphase {

/// Error function, library-grade: absolute error below 1e-13 on all of R.
double erf(double x);

/// Scaled complement e^{x^2} erfc(x); stays finite for large positive x.
double erfcx(double x);

/// Inputs of the coherent-state phase-distribution closed forms.
/// X = |alpha0| cos(theta - theta0) never exceeds X0 = |alpha0|.
struct CoherentPDParams {
    Complex alpha0;
    double theta;
};

/// The two addends of the coherent-state Husimi PD: the Gaussian residue term
/// and the drift term carrying the erf factor, both including the common
/// 1/(2 pi) prefactor. The Wehrl PD is their f2-, f1-weighted combination:
///   husimi = gauss + drift,  wehrl = f2 * gauss + f1 * drift,
/// with f_j = X0^2 - X^2 + ln(pi) + j/2.
struct CoherentPDTerms {
    double gauss;
    double drift;
    double f1;
    double f2;
};

CoherentPDTerms coherent_pd_terms(const CoherentPDParams& p);

/// Wehrl phase distribution of a single coherent state.
double coherent_wehrl_pd(const CoherentPDParams& p);

/// Husimi phase distribution of a single coherent state.
double coherent_husimi_pd(const CoherentPDParams& p);

/// Large-separation cat approximation: the half-weighted coherent PDs of
/// +-alpha0 plus the ln 2 phase-uncertainty term. Independent of the
/// superposition phase by construction; the theta-integral is 1 + ln(2 pi).
double approx_cat_wehrl_pd(Complex alpha0, double theta);

/// Large-separation kitten approximation,
///   sum_k |c_k|^2 S_cs(alpha_k) - sum_k |c_k|^2 ln(|c_k|^2) P_cs(alpha_k),
/// valid for components on a common circle (N <= n_max(alpha0)).
/// Throws MixedModuliError when the amplitude moduli differ by more than 1e-9.
double approx_kitten_wehrl_pd(const CoherentSuperposition& state, double theta);

/// High-amplitude Wehrl entropy 1 + ln(pi) + H(weights), H in nats.
/// Throws BadWeightsError unless weights are nonnegative and sum to 1
/// within 1e-9.
double approx_wehrl_entropy(const std::vector<double>& weights);

}  // namespace catphase
