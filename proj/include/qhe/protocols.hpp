#pragma once

// Drive families: the linear Landau-Zener ramp and the invariant-based
// shortcut drive, including endpoint solving and validity checks.

#include <functional>
#include <utility>

#include "qhe/propagator.hpp"

namespace qhe {

/// Linear Z ramp parameters. Engine configurations have z2 < z1
/// (gap compression).
struct LZParams {
    double z1{};
    double z2{};
    double x{};
    double tau{};

    double eps1() const { return std::sqrt(z1 * z1 + x * x); }
    double eps2() const { return std::sqrt(z2 * z2 + x * x); }
};

/// Interpolation shape for the invariant z(t) protocol. All kinds have
/// vanishing first and second derivatives at both endpoints.
enum class ZProtocolKind { Quintic, SineSquared, Sextic };

/// z(t) between z0 and zt with analytic derivatives.
struct ZPath {
    ZProtocolKind kind{};
    double z0{};
    double zt{};
    double tau{};

    double z(double t) const;
    double dz(double t) const;
    double ddz(double t) const;
};

/// Shortcut drive parameters: the reference LZ ramp, the invariant
/// scale A (eigenvalues are +-A), and the z(t) shape.
struct InvariantParams {
    LZParams base{};
    double a_const{};
    ZProtocolKind kind{ZProtocolKind::Quintic};
};

/// Solve z1 = sqrt(eps1^2 - x^2), z2 = sqrt((ratio*eps1)^2 - x^2),
/// positive-root convention. Throws GapTooLarge when x > ratio*eps1.
std::pair<double, double> lz_endpoints(double eps1, double ratio, double x);

/// t -> (x, 0, z1 + (z2 - z1) t/tau).
DriveProtocol lz_drive(const LZParams& p);

ZPath z_protocol(ZProtocolKind kind, double z0, double zt, double tau);

/// Endpoint values z(0) = A z1/sqrt(z1^2+x^2), z(tau) = A z2/sqrt(z2^2+x^2)
/// forced by endpoint commutation with the boundary Hamiltonians.
std::pair<double, double> invariant_boundaries(double a_const, double z1,
                                               double z2, double x);

/// t -> (sqrt(A^2 - zdot^2/(4X^2) - z^2), zdot/(2X), z(t)) with X the
/// constant transverse field of the base ramp. The radicand is validated
/// on a dense grid (>= 2048 points); RadicandNegative reports the
/// violating t and the minimum value.
DriveProtocol invariant_drive(const InvariantParams& p);

/// Companion Z(t) = (zddot/(4X) + z X) / sqrt(A^2 - zdot^2/(4X^2) - z^2),
/// the LZ-frame control consistent with invariance. Diagnostic surface;
/// satisfies Z(0) = z1, Z(tau) = z2.
std::function<double(double)> lz_Z_from_invariant(const InvariantParams& p);

} // namespace qhe
