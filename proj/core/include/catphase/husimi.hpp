#pragma once

#include "catphase/states.hpp"

namespace catphase {

/// Point alpha = r e^{i theta} of the phase plane.
struct PhasePoint {
    Complex alpha;

    PhasePoint(Complex a) : alpha(a) {}
    PhasePoint(double r, double theta) : alpha(std::polar(r, theta)) {}

    double radius() const { return std::abs(alpha); }
    double angle() const;  // Arg alpha in [0, 2pi)
};

/// Husimi density together with its logarithm. log_q is assembled from the
/// overlap exponents before any exponentiation, so it stays finite long after
/// q itself underflows; log_q = -inf only where q is exactly zero.
struct QValue {
    double q;
    double log_q;
};

/// Q(alpha) = (1/pi) |sum_k c_k <alpha|alpha_k>|^2. Bounded by 1/pi.
double q_value(const CoherentSuperposition& state, PhasePoint point);

QValue q_value_with_log(const CoherentSuperposition& state, PhasePoint point);

/// Q split into the free (single-component) part and the signed interference
/// cross terms. total = free + interference and agrees with q_value.
struct QDecomposition {
    double free;
    double interference;
    double total;
};

QDecomposition q_decompose(const CoherentSuperposition& state, PhasePoint point);

}  // namespace catphase
