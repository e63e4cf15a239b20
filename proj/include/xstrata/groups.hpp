#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xstrata/eigen.hpp"
#include "xstrata/matrix.hpp"
#include "xstrata/pauli.hpp"

namespace xstrata {

/// Basis permutation P (swaps basis vectors 1 and 3, 0-indexed), the fixed
/// involution that turns every X-shaped matrix into a 2x2 (+) 2x2
/// block-diagonal one.
inline const Matrix4& permutation_pi() {
    static const Matrix4 p = [] {
        Matrix4 m;
        m(0, 0) = 1.0;
        m(1, 3) = 1.0;
        m(2, 2) = 1.0;
        m(3, 1) = 1.0;
        return m;
    }();
    return p;
}

/// Conjugation by the permutation: P m P.
inline Matrix4 pi_frame(const Matrix4& m) {
    const Matrix4& p = permutation_pi();
    return p * m * p;
}

inline Matrix2 block_a(const Matrix4& m) {
    Matrix2 b;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) b(r, c) = m(r, c);
    return b;
}

inline Matrix2 block_b(const Matrix4& m) {
    Matrix2 b;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) b(r, c) = m(r + 2, c + 2);
    return b;
}

inline Matrix4 block_diag(const Matrix2& a, const Matrix2& b) {
    Matrix4 m;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            m(r, c) = a(r, c);
            m(r + 2, c + 2) = b(r, c);
        }
    return m;
}

/// SU(2) exponential of an axis-angle vector v = theta * n (|n| = 1):
/// exp(i (theta/2) n.sigma) = cos(theta/2) I + i sin(theta/2) n.sigma.
inline Matrix2 su2_exp(const std::array<double, 3>& axis_angle) {
    const double theta =
        std::hypot(axis_angle[0], axis_angle[1], axis_angle[2]);
    Matrix2 u = Matrix2::identity();
    if (theta == 0.0) return u;
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta) / theta; // folds in normalization
    const double n1 = axis_angle[0] * s, n2 = axis_angle[1] * s, n3 = axis_angle[2] * s;
    u(0, 0) = cplx(c, n3);
    u(0, 1) = cplx(n2, n1);
    u(1, 0) = cplx(-n2, n1);
    u(1, 1) = cplx(c, -n3);
    return u;
}

/// Inverse of su2_exp on SU(2); returns theta in [0, 2*pi].
inline std::array<double, 3> su2_log(const Matrix2& u) {
    const double c = 0.5 * (u(0, 0).real() + u(1, 1).real());
    const double sn1 = 0.5 * (u(0, 1).imag() + u(1, 0).imag());
    const double sn2 = 0.5 * (u(0, 1).real() - u(1, 0).real());
    const double sn3 = 0.5 * (u(0, 0).imag() - u(1, 1).imag());
    const double s = std::hypot(sn1, sn2, sn3);
    if (s < 1e-14) {
        // u ~ +/- I; -I is reached as a full turn about z.
        if (c < 0.0) return {0.0, 0.0, 2.0 * std::numbers::pi};
        return {0.0, 0.0, 0.0};
    }
    const double theta = 2.0 * std::atan2(s, c);
    return {theta * sn1 / s, theta * sn2 / s, theta * sn3 / s};
}

inline Matrix2 z_rotation(double gamma) {
    Matrix2 u;
    u(0, 0) = std::polar(1.0, 0.5 * gamma);
    u(1, 1) = std::polar(1.0, -0.5 * gamma);
    return u;
}

/// Element of the 7-parameter invariance group of the X-states: a relative
/// phase plus two independent SU(2) blocks in the permuted frame.
struct GlobalElement {
    double omega15 = 0.0;
    std::array<double, 3> su2_a{}; // axis-angle, first block
    std::array<double, 3> su2_b{}; // axis-angle, second block
};

/// Element of the 2-parameter local subgroup (independent single-qubit
/// z-phases, permuted frame).
struct LocalElement {
    double phi1 = 0.0;
    double phi2 = 0.0;
};

enum class IsotropyKind { H, HPlus, HMinus, HZero };

/// Stabilizer element of one of the four conjugacy families: the maximal
/// torus H, the two degenerate families with one full SU(2) block, or the
/// whole group (HZero).
struct IsotropyElement {
    IsotropyKind kind = IsotropyKind::H;
    double omega = 0.0;
    double gamma1 = 0.0;           // kinds H, HMinus
    double gamma2 = 0.0;           // kinds H, HPlus
    std::array<double, 3> su2{};   // kinds HPlus, HMinus
    GlobalElement full{};          // kind HZero
};

inline Matrix4 realize_global(const GlobalElement& g) {
    const cplx pa = std::polar(1.0, -g.omega15);
    const cplx pb = std::polar(1.0, g.omega15);
    return pi_frame(block_diag(pa * su2_exp(g.su2_a), pb * su2_exp(g.su2_b)));
}

inline Matrix4 realize_local(const LocalElement& l) {
    return pi_frame(tensor_product(z_rotation(l.phi1), z_rotation(l.phi2)));
}

/// The global element whose realization equals realize_local(l).
inline GlobalElement embed_local(const LocalElement& l) {
    return GlobalElement{-0.5 * l.phi1, {0.0, 0.0, l.phi2}, {0.0, 0.0, l.phi2}};
}

inline Matrix4 realize_isotropy(const IsotropyElement& e) {
    const cplx pa = std::polar(1.0, e.omega);
    const cplx pb = std::polar(1.0, -e.omega);
    switch (e.kind) {
        case IsotropyKind::H:
            return pi_frame(block_diag(pa * z_rotation(e.gamma1), pb * z_rotation(e.gamma2)));
        case IsotropyKind::HPlus:
            return pi_frame(block_diag(pa * su2_exp(e.su2), pb * z_rotation(e.gamma2)));
        case IsotropyKind::HMinus:
            return pi_frame(block_diag(pa * z_rotation(e.gamma1), pb * su2_exp(e.su2)));
        case IsotropyKind::HZero:
            return realize_global(e.full);
    }
    throw std::logic_error("realize_isotropy: bad kind");
}

/// u rho u†.  Rejects non-unitary u.
inline Matrix4 adjoint(const Matrix4& u, const Matrix4& rho, double tol = 1e-9) {
    if (!u.is_unitary(tol)) throw std::invalid_argument("adjoint: matrix is not unitary");
    return u * rho * u.adjoint();
}

/// Shape test for membership in the invariance group: unitary, block-diagonal
/// in the permuted frame, and the two block determinants are mutually inverse
/// phases (their product is 1).
inline bool is_in_gx(const Matrix4& u, double tol = 1e-9) {
    if (!u.is_unitary(tol)) return false;
    const Matrix4 w = pi_frame(u);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            if (std::abs(w(r, c + 2)) > tol || std::abs(w(r + 2, c)) > tol) return false;
    const Matrix2 a = block_a(w);
    const Matrix2 b = block_b(w);
    const cplx det_a = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const cplx det_b = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
    return std::abs(det_a * det_b - 1.0) <= tol;
}

} // namespace xstrata
