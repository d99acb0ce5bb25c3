#include "qhe/pauli.hpp"

namespace qhe {

namespace {

// Rotate the global phase so the dominant component is real positive.
Spinor fix_phase(Spinor v) {
    v = v.normalized();
    const Complex c = std::abs(v.up) >= std::abs(v.down) ? v.up : v.down;
    const Complex phase = std::conj(c) / std::abs(c);
    return {v.up * phase, v.down * phase};
}

} // namespace

EigenSystem eigensystem(const PauliVector& p) {
    const double eps = p.magnitude();
    if (!(eps > 0)) throw DegenerateGenerator();

    const Complex xy{p.x, p.y};   // X + iY
    Spinor excited, ground;
    if (p.z >= 0) {
        // eps + Z is the large branch
        excited = {Complex{eps + p.z, 0}, xy};
        ground = {-std::conj(xy), Complex{eps + p.z, 0}};
    } else {
        excited = {std::conj(xy), Complex{eps - p.z, 0}};
        ground = {Complex{p.z - eps, 0}, xy};
    }
    return {eps, fix_phase(ground), fix_phase(excited)};
}

UnitaryMatrix step_unitary(const PauliVector& p, double dt) {
    const double eps = p.magnitude();
    const double theta = eps * dt;
    // sin(theta)/eps with a series branch through eps -> 0
    const double s = std::abs(theta) < 1e-8 ? dt * (1.0 - theta * theta / 6.0)
                                            : std::sin(theta) / eps;
    const double c = std::cos(theta);
    const Complex is{0, s};
    return {{c - is * p.z, -is * Complex{p.x, -p.y},
             -is * Complex{p.x, p.y}, c + is * p.z}};
}

double fidelity(const Spinor& a, const Spinor& b) {
    const double na = a.norm(), nb = b.norm();
    if (std::abs(na - 1.0) > 1e-6) throw NotNormalized(na);
    if (std::abs(nb - 1.0) > 1e-6) throw NotNormalized(nb);
    const double f = std::norm(inner(a, b));
    return std::min(1.0, std::max(0.0, f));
}

} // namespace qhe
