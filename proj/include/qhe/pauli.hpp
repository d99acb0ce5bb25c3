#pragma once

// Exact algebra of traceless Hermitian 2x2 generators: eigensystems,
// analytic single-step exponentials, inner products, norms.

#include <array>
#include <cmath>
#include <complex>

#include "qhe/errors.hpp"

namespace qhe {

using Complex = std::complex<double>;

/// Two-component complex state vector.
struct Spinor {
    Complex up{};
    Complex down{};

    double norm() const {
        return std::sqrt(std::norm(up) + std::norm(down));
    }
    Spinor normalized() const {
        const double n = norm();
        return {up / n, down / n};
    }
};

inline Complex inner(const Spinor& a, const Spinor& b) {
    return std::conj(a.up) * b.up + std::conj(a.down) * b.down;
}

/// Complex 2x2 matrix, row-major. Products of step_unitary results stay
/// unitary to roundoff.
struct Mat2 {
    std::array<Complex, 4> m{};  // [a b; c d]

    static Mat2 identity() { return {{Complex{1, 0}, {}, {}, Complex{1, 0}}}; }

    Complex& operator()(int r, int c) { return m[2 * r + c]; }
    const Complex& operator()(int r, int c) const { return m[2 * r + c]; }

    Mat2 operator*(const Mat2& o) const {
        return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                 m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
    }
    Mat2 operator+(const Mat2& o) const {
        return {{m[0] + o.m[0], m[1] + o.m[1], m[2] + o.m[2], m[3] + o.m[3]}};
    }
    Mat2 operator-(const Mat2& o) const {
        return {{m[0] - o.m[0], m[1] - o.m[1], m[2] - o.m[2], m[3] - o.m[3]}};
    }
    Mat2 operator*(Complex s) const {
        return {{m[0] * s, m[1] * s, m[2] * s, m[3] * s}};
    }
    Mat2 adjoint() const {
        return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
    }
    Mat2 inverse() const {
        const Complex det = m[0] * m[3] - m[1] * m[2];
        return {{m[3] / det, -m[1] / det, -m[2] / det, m[0] / det}};
    }
    Complex trace() const { return m[0] + m[3]; }

    Spinor operator*(const Spinor& v) const {
        return {m[0] * v.up + m[1] * v.down, m[2] * v.up + m[3] * v.down};
    }

    /// Largest entry magnitude of the difference from another matrix.
    double max_diff(const Mat2& o) const {
        double d = 0;
        for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(m[i] - o.m[i]));
        return d;
    }
};

using UnitaryMatrix = Mat2;

/// Real coefficient triple of X*sx + Y*sy + Z*sz, in energy units.
struct PauliVector {
    double x{};
    double y{};
    double z{};

    double magnitude() const { return std::sqrt(x * x + y * y + z * z); }
    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

/// Dense matrix form [[Z, X-iY], [X+iY, -Z]].
inline Mat2 to_matrix(const PauliVector& p) {
    return {{Complex{p.z, 0}, Complex{p.x, -p.y}, Complex{p.x, p.y}, Complex{-p.z, 0}}};
}

/// Eigenpair of a non-degenerate generator: eigenvalues -epsilon (ground)
/// and +epsilon (excited).
struct EigenSystem {
    double epsilon{};
    Spinor ground{};
    Spinor excited{};
};

/// Orthonormal eigensystem of p.x*sx + p.y*sy + p.z*sz.
///
/// Eigenvectors are built from the branch that keeps the larger of
/// (eps+Z, eps-Z) in the construction, so there is no cancellation near
/// the poles Z -> +-eps. Global phase: the first component of larger
/// magnitude is made real positive.
EigenSystem eigensystem(const PauliVector& p);

/// exp(-i (p . sigma) dt), analytic. Total on finite inputs; the eps->0
/// limit returns the identity exactly.
UnitaryMatrix step_unitary(const PauliVector& p, double dt);

/// |<a|b>|^2, clamped to [0,1]. Throws NotNormalized if either input
/// norm deviates from 1 by more than 1e-6.
double fidelity(const Spinor& a, const Spinor& b);

/// trace(H^dag H) = 2(x^2 + y^2 + z^2).
inline double frobenius_sq(const PauliVector& p) {
    return 2.0 * (p.x * p.x + p.y * p.y + p.z * p.z);
}

} // namespace qhe
