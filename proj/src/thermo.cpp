#include "qhe/thermo.hpp"

#include <cmath>

namespace qhe {

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Engine: return "engine";
        case Regime::Heater: return "heater";
        case Regime::Accelerator: return "accelerator";
        case Regime::Refrigerator: return "refrigerator";
    }
    return "?";
}

namespace {

Mat2 projector(const Spinor& v) {
    return {{v.up * std::conj(v.up), v.up * std::conj(v.down),
             v.down * std::conj(v.up), v.down * std::conj(v.down)}};
}

} // namespace

DensityMatrix thermal_state(const PauliVector& p, double beta) {
    const EigenSystem es = eigensystem(p);
    // overflow-safe populations: pg = e^{b eps}/(2 cosh b eps)
    const double pg = 1.0 / (1.0 + std::exp(-2.0 * beta * es.epsilon));
    const double pe = 1.0 - pg;
    return projector(es.ground) * Complex{pg, 0} +
           projector(es.excited) * Complex{pe, 0};
}

std::pair<double, double> heats_closed_form(double eps1, double eps2,
                                            double beta1, double beta2,
                                            double f1, double f2,
                                            HeatForm form) {
    const double t1 = std::tanh(beta1 * eps1);
    const double t2 = std::tanh(beta2 * eps2);
    if (form == HeatForm::DerivationConsistent) {
        return {-eps1 * (t1 + t2 * (1 - 2 * f1)),
                -eps2 * (t2 + t1 * (1 - 2 * f2))};
    }
    return {-eps1 * t1 - eps2 * t1 * (1 - 2 * f1),
            -eps2 * t2 - eps1 * t2 * (1 - 2 * f2)};
}

double work_total(double eps1, double eps2, double beta1, double beta2,
                  double f) {
    const double t1 = std::tanh(beta1 * eps1);
    const double t2 = std::tanh(beta2 * eps2);
    return -t1 * (eps1 + eps2 * (1 - 2 * f)) - t2 * (eps2 + eps1 * (1 - 2 * f));
}

double zero_work_fidelity(double eps1, double eps2, double beta1,
                          double beta2) {
    const double t1 = std::tanh(beta1 * eps1);
    const double t2 = std::tanh(beta2 * eps2);
    return 0.5 * (1 + (eps1 * t1 + eps2 * t2) / (eps2 * t1 + eps1 * t2));
}

std::pair<double, double> quasi_static(double eps1, double eps2, double beta1,
                                       double beta2) {
    const double w_qs =
        2 * (eps1 - eps2) * (1.0 / (1.0 + std::exp(2 * beta1 * eps1)) -
                             1.0 / (1.0 + std::exp(2 * beta2 * eps2)));
    return {w_qs, 1.0 - eps2 / eps1};
}

Regime classify(double q1, double q2, double w) {
    if (std::abs(w - (q1 + q2)) > 1e-9) throw Inconsistent(w, q1 + q2);
    if (q1 >= 0 && q2 <= 0 && w > 0) return Regime::Engine;
    if (q1 >= 0 && q2 <= 0) return Regime::Accelerator;
    if (q1 <= 0 && q2 <= 0) return Regime::Heater;
    return Regime::Refrigerator;
}

bool clausius_ok(double q1, double q2, double beta1, double beta2) {
    return q1 * beta1 + q2 * beta2 <= 1e-9;
}

double cost(const DriveProtocol& drive, long n) {
    if (n < 2) throw InvalidStepCount(n);
    const double dt = drive.tau / static_cast<double>(n - 1);
    double acc = 0;
    for (long i = 0; i < n - 1; ++i) {
        const double tm = (static_cast<double>(i) + 0.5) * dt;
        acc += frobenius_sq(drive.at(tm));
    }
    return acc * dt;
}

double cost_ratio(const InvariantParams& inv) {
    const double z1 = inv.base.z1;
    const double dz = inv.base.z2 - inv.base.z1;
    const double denom =
        z1 * z1 + z1 * dz + dz * dz / 3 + inv.base.x * inv.base.x;
    return inv.a_const * inv.a_const / denom;
}

std::pair<double, double> heats_trace_oracle(const DriveProtocol& drive,
                                             const BathPair& baths, long n) {
    const PauliVector p1 = drive.at(0.0);
    const PauliVector p2 = drive.at(drive.tau);
    const Mat2 h1 = to_matrix(p1);
    const Mat2 h2 = to_matrix(p2);
    const DensityMatrix rho1 = thermal_state(p1, baths.beta1);
    const DensityMatrix rho2 = thermal_state(p2, baths.beta2);

    const UnitaryMatrix u_egc = evolve(drive, n).u;
    const UnitaryMatrix u_ege = evolve(reverse(drive), n).u;
    const Mat2 rho2p = u_egc * rho1 * u_egc.adjoint();
    const Mat2 rho1p = u_ege * rho2 * u_ege.adjoint();

    const double q1 = (h1 * rho1).trace().real() - (h1 * rho1p).trace().real();
    const double q2 = (h2 * rho2).trace().real() - (h2 * rho2p).trace().real();
    return {q1, q2};
}

} // namespace qhe
