#pragma once

#include <stdexcept>
#include <string>

namespace diskflow {

// Constructing a generator whose Herglotz quotient fails Re p >= 0.
struct AdmissibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// f == 0: the identity semigroup carries no boundary dynamics.
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the open disk / right half-plane, or invalid range.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive step size underflowed its floor.
struct StepFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature exhausted its subdivision budget.
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sequence limit / infinite integral failed to contract.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation applied to the wrong semigroup type (hyperbolic vs parabolic).
struct ClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Paired-generator operation whose hypotheses (matching leading term) fail.
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace diskflow
