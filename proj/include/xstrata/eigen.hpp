#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "xstrata/matrix.hpp"

namespace xstrata {

/// Special-unitary diagonalizer for a 2x2 Hermitian matrix: returns u with
/// det(u) = 1 and u m u† diagonal, diagonal sorted descending.  An already
/// sorted diagonal input (including any multiple of the identity) yields the
/// identity.
inline Matrix2 su2_diagonalizer(const Matrix2& m, double tol = 1e-9) {
    if (!m.is_hermitian(tol)) {
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = r; c < 2; ++c)
                if (std::abs(m(r, c) - std::conj(m(c, r))) > tol)
                    throw std::invalid_argument(
                        detail::entry_diagnostic("su2_diagonalizer: non-Hermitian input", m, r, c));
    }
    const double a = m(0, 0).real();
    const double b = m(1, 1).real();
    const cplx c = 0.5 * (m(0, 1) + std::conj(m(1, 0)));

    const double half_gap = 0.5 * (a - b);
    const double disc = std::hypot(half_gap, std::abs(c));
    if (disc == 0.0) return Matrix2::identity();

    const double top = 0.5 * (a + b) + disc; // larger eigenvalue
    // Pick the better-conditioned eigenvector formula for the top eigenvalue.
    cplx v0, v1;
    if (a >= b) {
        v0 = cplx(top - b, 0.0);
        v1 = std::conj(c);
    } else {
        v0 = c;
        v1 = cplx(top - a, 0.0);
    }
    const double norm = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= norm;
    v1 /= norm;

    Matrix2 u;
    u(0, 0) = std::conj(v0);
    u(0, 1) = std::conj(v1);
    u(1, 0) = -v1;
    u(1, 1) = v0;
    return u;
}

template <std::size_t N>
struct EigenDecomposition {
    std::array<double, N> eigenvalues; // descending
    SquareMatrix<N> eigenvectors;      // columns; m = V diag(e) V†
};

/// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi with
/// complex Givens rotations.  Deterministic; residual of the reconstruction
/// is at machine-precision level for the 2x2/4x4 sizes used here.
template <std::size_t N>
EigenDecomposition<N> hermitian_eigen(const SquareMatrix<N>& m, double tol = 1e-9) {
    if (!m.is_hermitian(tol)) {
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = r; c < N; ++c)
                if (std::abs(m(r, c) - std::conj(m(c, r))) > tol)
                    throw std::invalid_argument(
                        detail::entry_diagnostic("hermitian_eigen: non-Hermitian input", m, r, c));
    }

    SquareMatrix<N> a = m;
    SquareMatrix<N> v = SquareMatrix<N>::identity();
    const double stop = 1e-15 * std::max(1.0, m.max_abs());

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= stop) break;

        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= stop) continue;

                // Phase factor takes the pivot to a real problem, then a
                // standard symmetric Jacobi rotation annihilates it:
                // G = diag(1, conj(u)) * [[c, s], [-s, c]] on the (p,q) plane.
                const cplx u = apq / mag;
                const cplx ubar = std::conj(u);
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cth = 1.0 / std::sqrt(1.0 + t * t);
                const double sth = t * cth;

                for (std::size_t r = 0; r < N; ++r) { // A <- A*G, V <- V*G
                    const cplx arp = a(r, p), arq = a(r, q);
                    a(r, p) = cth * arp - sth * ubar * arq;
                    a(r, q) = sth * arp + cth * ubar * arq;
                    const cplx vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = cth * vrp - sth * ubar * vrq;
                    v(r, q) = sth * vrp + cth * ubar * vrq;
                }
                for (std::size_t col = 0; col < N; ++col) { // A <- G† * A
                    const cplx apc = a(p, col), aqc = a(q, col);
                    a(p, col) = cth * apc - sth * u * aqc;
                    a(q, col) = sth * apc + cth * u * aqc;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    EigenDecomposition<N> out;
    std::array<std::size_t, N> order;
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::array<double, N> diag;
    for (std::size_t i = 0; i < N; ++i) diag[i] = a(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });
    for (std::size_t i = 0; i < N; ++i) {
        out.eigenvalues[i] = diag[order[i]];
        for (std::size_t r = 0; r < N; ++r) out.eigenvectors(r, i) = v(r, order[i]);
    }
    return out;
}

/// Eigenvalues (descending) of a real symmetric matrix, classic Jacobi.
template <std::size_t N>
std::array<double, N> symmetric_eigen(const SymMatrix<N>& m) {
    std::array<std::array<double, N>, N> a;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) a[r][c] = m(r, c);

    const double stop = 1e-15 * std::max(1.0, m.max_abs());
    for (int sweep = 0; sweep < 80; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) off = std::max(off, std::abs(a[p][q]));
        if (off <= stop) break;

        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                if (std::abs(a[p][q]) <= stop) continue;
                const double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t r = 0; r < N; ++r) {
                    const double arp = a[r][p], arq = a[r][q];
                    a[r][p] = c * arp - s * arq;
                    a[r][q] = s * arp + c * arq;
                }
                for (std::size_t col = 0; col < N; ++col) {
                    const double apc = a[p][col], aqc = a[q][col];
                    a[p][col] = c * apc - s * aqc;
                    a[q][col] = s * apc + c * aqc;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }

    std::array<double, N> ev;
    for (std::size_t i = 0; i < N; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

} // namespace xstrata
