#pragma once

// One full Otto cycle (HI -> EGC -> CI -> EGE) for either drive family.

#include <optional>
#include <string>

#include "qhe/thermo.hpp"

namespace qhe {

enum class DriveKind { LZ, Invariant };

struct CycleConfig {
    BathPair baths{};
    double eps1{1.0};
    double ratio{};        // eps2/eps1, in (0, 1]
    double x{0.1};
    double tau{};
    long n{kDefaultSteps};
    DriveKind drive{DriveKind::LZ};
    double a_const{1.0};   // invariant drives only
    ZProtocolKind protocol{ZProtocolKind::Quintic};
    HeatForm heat_form{HeatForm::DerivationConsistent};
};

struct CycleResult {
    double f1{};
    double f2{};
    double q1{};
    double q2{};
    double w{};
    std::optional<double> eta;       // undefined when Q1 = 0
    double w_qs{};
    double eta_qs{};
    double cost{};
    std::optional<double> cost_ratio;  // invariant drives only
    Regime regime{};
    bool clausius{};
};

/// Run the configured cycle. Construction errors are rethrown with the
/// stroke and parameter context attached.
CycleResult run_cycle(const CycleConfig& cfg);

/// Just the two stroke fidelities (F1 from EGE, F2 from EGC).
std::pair<double, double> fidelity_pair(const CycleConfig& cfg);

} // namespace qhe
