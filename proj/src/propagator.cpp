#include "qhe/propagator.hpp"

#include <algorithm>
#include <cmath>

namespace qhe {

EvolutionResult evolve(const DriveProtocol& drive, long n) {
    if (n < 2) throw InvalidStepCount(n);
    const double dt = drive.tau / static_cast<double>(n - 1);
    UnitaryMatrix u = Mat2::identity();
    for (long i = 0; i < n - 1; ++i) {
        const double tm = (static_cast<double>(i) + 0.5) * dt;
        const PauliVector p = drive.at(tm);
        if (!p.finite()) throw NonFiniteDrive(tm);
        u = step_unitary(p, dt) * u;
    }
    return {u, n};
}

DriveProtocol reverse(const DriveProtocol& drive) {
    return {drive.tau,
            [f = drive.at, tau = drive.tau](double t) { return f(tau - t); }};
}

namespace {

// -i F(t) U
Mat2 rhs(const DriveProtocol& drive, double t, const Mat2& u) {
    const PauliVector p = drive.at(t);
    if (!p.finite()) throw NonFiniteDrive(t);
    return to_matrix(p) * u * Complex{0, -1};
}

// Polar projection onto the unitary group by Newton iteration on
// U <- (U + (U^dag)^-1)/2.
Mat2 polar_unitary(Mat2 u) {
    for (int k = 0; k < 4; ++k) {
        u = (u + u.adjoint().inverse()) * Complex{0.5, 0};
    }
    return u;
}

} // namespace

UnitaryMatrix evolve_oracle(const DriveProtocol& drive, double tol) {
    tol = std::clamp(tol, 1e-12, 1e-4);
    // Dormand-Prince 5(4) coefficients
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                            c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113,
                            b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                            e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    const double tau = drive.tau;
    Mat2 u = Mat2::identity();
    double t = 0.0;
    double h = tau / 64.0;
    const double h_min = tau * 1e-14;

    Mat2 k1 = rhs(drive, t, u);
    while (t < tau) {
        h = std::min(h, tau - t);
        if (h < h_min) throw ToleranceNotReached();

        const Mat2 k2 = rhs(drive, t + c2 * h, u + k1 * Complex{a21 * h, 0});
        const Mat2 k3 = rhs(drive, t + c3 * h,
                            u + k1 * Complex{a31 * h, 0} + k2 * Complex{a32 * h, 0});
        const Mat2 k4 = rhs(drive, t + c4 * h,
                            u + k1 * Complex{a41 * h, 0} + k2 * Complex{a42 * h, 0} +
                                k3 * Complex{a43 * h, 0});
        const Mat2 k5 = rhs(drive, t + c5 * h,
                            u + k1 * Complex{a51 * h, 0} + k2 * Complex{a52 * h, 0} +
                                k3 * Complex{a53 * h, 0} + k4 * Complex{a54 * h, 0});
        const Mat2 k6 = rhs(drive, t + h,
                            u + k1 * Complex{a61 * h, 0} + k2 * Complex{a62 * h, 0} +
                                k3 * Complex{a63 * h, 0} + k4 * Complex{a64 * h, 0} +
                                k5 * Complex{a65 * h, 0});
        const Mat2 u_new = u + k1 * Complex{b1 * h, 0} + k3 * Complex{b3 * h, 0} +
                           k4 * Complex{b4 * h, 0} + k5 * Complex{b5 * h, 0} +
                           k6 * Complex{b6 * h, 0};
        const Mat2 k7 = rhs(drive, t + h, u_new);
        const Mat2 err_m = k1 * Complex{e1 * h, 0} + k3 * Complex{e3 * h, 0} +
                           k4 * Complex{e4 * h, 0} + k5 * Complex{e5 * h, 0} +
                           k6 * Complex{e6 * h, 0} + k7 * Complex{e7 * h, 0};
        double err = 0;
        for (const auto& e : err_m.m) err = std::max(err, std::abs(e));

        if (err <= tol) {
            t += h;
            u = u_new;
            k1 = k7;  // FSAL
        }
        const double scale =
            err > 0 ? 0.9 * std::pow(tol / err, 0.2) : 5.0;
        h *= std::clamp(scale, 0.2, 5.0);
    }
    return polar_unitary(u);
}

} // namespace qhe
