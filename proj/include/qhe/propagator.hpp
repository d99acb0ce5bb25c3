#pragma once

// Time-ordered finite-time evolution operator for an arbitrary drive,
// via a midpoint product formula, plus an adaptive high-accuracy oracle.

#include <functional>

#include "qhe/pauli.hpp"

namespace qhe {

/// Time-parameterized generator on [0, tau].
struct DriveProtocol {
    double tau{};
    std::function<PauliVector(double)> at;
};

struct EvolutionResult {
    UnitaryMatrix u;
    long steps{};
};

inline constexpr long kDefaultSteps = 10001;

/// U(0;tau) as the ordered product of n-1 midpoint-sampled step unitaries
/// over the grid t_0 = 0, ..., t_{n-1} = tau. Later steps multiply on
/// the left.
EvolutionResult evolve(const DriveProtocol& drive, long n = kDefaultSteps);

/// The protocol t -> drive(tau - t), same duration.
DriveProtocol reverse(const DriveProtocol& drive);

/// Integrates i dU/dt = F(t) U with an adaptive Dormand-Prince 5(4) pair
/// (local error <= tol), then re-unitarizes by polar projection.
/// Independent of evolve(); intended for cross-checks.
UnitaryMatrix evolve_oracle(const DriveProtocol& drive, double tol);

} // namespace qhe
