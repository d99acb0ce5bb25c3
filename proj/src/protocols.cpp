#include "qhe/protocols.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace qhe {

namespace {

constexpr double pi = std::numbers::pi;

// Unit ramps q: [0,1] -> [0,1] with q'(0)=q'(1)=q''(0)=q''(1)=0.
double ramp(ZProtocolKind k, double s) {
    switch (k) {
        case ZProtocolKind::Quintic:
            return ((6 * s - 15) * s + 10) * s * s * s;
        case ZProtocolKind::SineSquared: {
            const double inner = std::sin(pi * s / 2);
            const double u = std::sin(pi / 2 * inner * inner);
            return u * u;
        }
        case ZProtocolKind::Sextic:
            return ((10 * s - 24) * s + 15) * s * s * s * s;
    }
    return 0;
}

double dramp(ZProtocolKind k, double s) {
    switch (k) {
        case ZProtocolKind::Quintic:
            return 30 * s * s * (s - 1) * (s - 1);
        case ZProtocolKind::SineSquared: {
            const double w = pi * s / 2;
            const double v = std::sin(w) * std::sin(w);
            const double u = pi / 2 * v;
            return std::sin(2 * u) * (pi * pi / 4) * std::sin(2 * w);
        }
        case ZProtocolKind::Sextic:
            return ((60 * s - 120) * s + 60) * s * s * s;
    }
    return 0;
}

double ddramp(ZProtocolKind k, double s) {
    switch (k) {
        case ZProtocolKind::Quintic:
            return ((120 * s - 180) * s + 60) * s;
        case ZProtocolKind::SineSquared: {
            const double w = pi * s / 2;
            const double v = std::sin(w) * std::sin(w);
            const double u = pi / 2 * v;
            const double s2w = std::sin(2 * w);
            return std::cos(2 * u) * (pi * pi * pi * pi / 8) * s2w * s2w +
                   std::sin(2 * u) * (pi * pi * pi / 4) * std::cos(2 * w);
        }
        case ZProtocolKind::Sextic:
            return ((300 * s - 480) * s + 180) * s * s;
    }
    return 0;
}

} // namespace

double ZPath::z(double t) const { return z0 + (zt - z0) * ramp(kind, t / tau); }
double ZPath::dz(double t) const {
    return (zt - z0) * dramp(kind, t / tau) / tau;
}
double ZPath::ddz(double t) const {
    return (zt - z0) * ddramp(kind, t / tau) / (tau * tau);
}

std::pair<double, double> lz_endpoints(double eps1, double ratio, double x) {
    const double eps2 = ratio * eps1;
    if (x > eps2) throw GapTooLarge(x, eps2);
    return {std::sqrt(eps1 * eps1 - x * x), std::sqrt(eps2 * eps2 - x * x)};
}

DriveProtocol lz_drive(const LZParams& p) {
    return {p.tau, [p](double t) {
                return PauliVector{p.x, 0.0, p.z1 + (p.z2 - p.z1) * t / p.tau};
            }};
}

ZPath z_protocol(ZProtocolKind kind, double z0, double zt, double tau) {
    return {kind, z0, zt, tau};
}

std::pair<double, double> invariant_boundaries(double a_const, double z1,
                                               double z2, double x) {
    return {a_const * z1 / std::sqrt(z1 * z1 + x * x),
            a_const * z2 / std::sqrt(z2 * z2 + x * x)};
}

namespace {

struct InvariantPieces {
    ZPath path;
    double a_sq;
    double big_x;

    double radicand(double t) const {
        const double zd = path.dz(t);
        const double zv = path.z(t);
        return a_sq - zd * zd / (4 * big_x * big_x) - zv * zv;
    }
};

InvariantPieces build_pieces(const InvariantParams& p) {
    const auto [z0, zt] =
        invariant_boundaries(p.a_const, p.base.z1, p.base.z2, p.base.x);
    return {z_protocol(p.kind, z0, zt, p.base.tau), p.a_const * p.a_const,
            p.base.x};
}

// Dense positivity scan of the radicand; throws with the worst point.
void validate(const InvariantPieces& ip, double tau) {
    constexpr int n = 2048;
    double min_rad = std::numeric_limits<double>::infinity();
    double t_min = 0;
    for (int i = 0; i <= n; ++i) {
        const double t = tau * static_cast<double>(i) / n;
        const double r = ip.radicand(t);
        if (r < min_rad) {
            min_rad = r;
            t_min = t;
        }
    }
    if (!(min_rad > 0)) throw RadicandNegative(t_min, min_rad);
}

} // namespace

DriveProtocol invariant_drive(const InvariantParams& p) {
    const InvariantPieces ip = build_pieces(p);
    validate(ip, p.base.tau);
    return {p.base.tau, [ip](double t) {
                const double zv = ip.path.z(t);
                const double zd = ip.path.dz(t);
                const double rad = ip.radicand(t);
                return PauliVector{std::sqrt(std::max(rad, 0.0)),
                                   zd / (2 * ip.big_x), zv};
            }};
}

std::function<double(double)> lz_Z_from_invariant(const InvariantParams& p) {
    const InvariantPieces ip = build_pieces(p);
    validate(ip, p.base.tau);
    return [ip](double t) {
        const double num = ip.path.ddz(t) / (4 * ip.big_x) + ip.path.z(t) * ip.big_x;
        return num / std::sqrt(ip.radicand(t));
    };
}

} // namespace qhe
