#pragma once

#include <stdexcept>

namespace catphase {

// Requested superposition cancels destructively; its Gram-weighted norm is
// numerically zero (e.g. |a> - |a>).
class ZeroNormError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Bisection bracket failed to enclose a sign change.
class NoRootError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Grid doubling moved the result by more than the requested tolerance allows;
// the quadrature domain or node counts are too small for the state.
class NonConvergedError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Component amplitudes do not share a common modulus, so the common-circle
// closed forms do not apply.
class MixedModuliError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Weight vector is not a probability distribution.
class BadWeightsError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace catphase
