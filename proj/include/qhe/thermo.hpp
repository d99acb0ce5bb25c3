#pragma once

// Thermodynamic scalars: heats, work, efficiency, quasi-static references,
// zero-work fidelity boundary, regime classification, Clausius check,
// cost functionals, plus a density-matrix trace oracle.

#include <optional>
#include <utility>

#include "qhe/protocols.hpp"

namespace qhe {

/// Inverse temperatures; beta1 is the hot bath, so beta1 < beta2.
struct BathPair {
    double beta1{0.01};
    double beta2{0.04};
};

enum class Regime { Engine, Heater, Accelerator, Refrigerator };

const char* to_string(Regime r);

/// Which pairing of the fidelity second terms to use in the closed-form
/// heats. DerivationConsistent reproduces the trace definition;
/// AsPrinted is kept as a diagnostic.
enum class HeatForm { DerivationConsistent, AsPrinted };

/// 2x2 Hermitian, unit trace.
using DensityMatrix = Mat2;

/// Gibbs state of the generator p at inverse temperature beta:
/// populations e^{+-beta eps}/(2 cosh(beta eps)) on ground/excited
/// projectors.
DensityMatrix thermal_state(const PauliVector& p, double beta);

/// Closed-form isochore heats for given stroke fidelities.
std::pair<double, double> heats_closed_form(
    double eps1, double eps2, double beta1, double beta2, double f1, double f2,
    HeatForm form = HeatForm::DerivationConsistent);

/// W = -tanh(b1 e1)[e1 + e2(1-2f)] - tanh(b2 e2)[e2 + e1(1-2f)].
double work_total(double eps1, double eps2, double beta1, double beta2,
                  double f);

/// The fidelity at which the total work (and efficiency) vanish.
double zero_work_fidelity(double eps1, double eps2, double beta1, double beta2);

/// Quasi-static (adiabatic, F=1) work and efficiency references.
std::pair<double, double> quasi_static(double eps1, double eps2, double beta1,
                                       double beta2);

/// Classify by the sign pattern of (Q1, Q2, W), resolving boundary ties
/// in the order Engine, Accelerator, Heater, Refrigerator.
Regime classify(double q1, double q2, double w);

/// Clausius inequality Q1 b1 + Q2 b2 <= 0 with numerical slack 1e-9.
bool clausius_ok(double q1, double q2, double beta1, double beta2);

/// Integral of the squared Frobenius norm of the generator, composite
/// midpoint quadrature on the evolve() grid. Proportionality constant 1.
double cost(const DriveProtocol& drive, long n = kDefaultSteps);

/// C_I / C_LZ closed form: A^2 / (z1^2 + z1 dz + dz^2/3 + x^2).
double cost_ratio(const InvariantParams& inv);

/// Heats evaluated directly from the trace definition: thermal states at
/// the drive endpoints, propagated with evolve(), energy-expectation
/// differences. Validates heats_closed_form.
std::pair<double, double> heats_trace_oracle(const DriveProtocol& drive,
                                             const BathPair& baths,
                                             long n = kDefaultSteps);

} // namespace qhe
