#pragma once

#include <stdexcept>
#include <string>

namespace qhe {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The generator has zero magnitude; no preferred eigenbasis exists.
struct DegenerateGenerator : Error {
    DegenerateGenerator() : Error("degenerate generator (epsilon = 0)") {}
};

/// A state passed to fidelity() deviates from unit norm.
struct NotNormalized : Error {
    explicit NotNormalized(double norm)
        : Error("spinor not normalized (|v| = " + std::to_string(norm) + ")") {}
};

/// Fewer than two grid points requested for a time-ordered product.
struct InvalidStepCount : Error {
    explicit InvalidStepCount(long n)
        : Error("step count must be >= 2, got " + std::to_string(n)) {}
};

/// A drive sample contained NaN or Inf.
struct NonFiniteDrive : Error {
    explicit NonFiniteDrive(double t)
        : Error("non-finite drive sample at t = " + std::to_string(t)) {}
};

/// Adaptive integrator step size underflowed before meeting tolerance.
struct ToleranceNotReached : Error {
    ToleranceNotReached() : Error("adaptive step size underflow") {}
};

/// The avoided-crossing gap is too large for the requested compression.
struct GapTooLarge : Error {
    GapTooLarge(double x, double limit)
        : Error("gap parameter x = " + std::to_string(x) +
                " exceeds ratio*eps1 = " + std::to_string(limit)) {}
};

/// The invariant scale A is too small for the chosen z-protocol: the
/// transverse coefficient would be complex somewhere on [0, tau].
struct RadicandNegative : Error {
    double t_violation;
    double min_radicand;
    RadicandNegative(double t, double rad)
        : Error("invariant radicand non-positive (min " + std::to_string(rad) +
                " at t = " + std::to_string(t) + ")"),
          t_violation(t), min_radicand(rad) {}
};

/// Heat/work bookkeeping violated W = Q1 + Q2.
struct Inconsistent : Error {
    Inconsistent(double w, double q_sum)
        : Error("w = " + std::to_string(w) + " does not match q1+q2 = " +
                std::to_string(q_sum)) {}
};

/// Sweep configuration could not be parsed or validated.
struct ConfigParse : Error {
    using Error::Error;
};

/// Output file could not be written.
struct IoFailure : Error {
    using Error::Error;
};

} // namespace qhe
