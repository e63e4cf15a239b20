#pragma once

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "xstrata/eigen.hpp"
#include "xstrata/groups.hpp"
#include "xstrata/matrix.hpp"
#include "xstrata/pauli.hpp"

namespace xstrata {

/// The seven real coordinates of an X-state, named after the generators they
/// multiply.  Unphysical values are representable on purpose; operations that
/// need positivity check it explicitly.
struct XCoords {
    double h3 = 0.0, h6 = 0.0, h7 = 0.0, h8 = 0.0, h10 = 0.0, h11 = 0.0, h15 = 0.0;

    std::array<double, 7> to_array() const { return {h3, h6, h7, h8, h10, h11, h15}; }
    static XCoords from_array(const std::array<double, 7>& a) {
        return {a[0], a[1], a[2], a[3], a[4], a[5], a[6]};
    }
    bool operator==(const XCoords&) const = default;
};

/// Norms of the two sign-combined coordinate triples.  radius_plus splits the
/// block with trace (1 - h15)/2 (matrix corners), radius_minus the inner
/// block with trace (1 + h15)/2.
inline double radius_plus(const XCoords& h) {
    return std::hypot(h.h3 + h.h6, h.h8 + h.h10, h.h7 + h.h11);
}
inline double radius_minus(const XCoords& h) {
    return std::hypot(h.h3 - h.h6, h.h8 - h.h10, h.h7 - h.h11);
}

/// rho = (1/4)(I + 2i sum_k h_k g_k) over the seven signed generators.  Total
/// on all coordinate values; the eight entries outside the diagonal and
/// anti-diagonal are exactly zero by construction.
inline Matrix4 to_matrix(const XCoords& h) {
    const auto& gen = PauliBasis::instance().generators;
    const std::array<double, 7> v = h.to_array();
    Matrix4 m = Matrix4::identity();
    for (std::size_t k = 0; k < 7; ++k) m = m + (cplx(0.0, 2.0) * v[k]) * gen[k];
    return 0.25 * m;
}

/// Coordinate extraction h_k = sign_k * 2i Tr(m lambda_k).  Requires a
/// Hermitian, unit-trace, X-shaped input; every violation is reported with
/// the offending entry.
inline XCoords from_matrix(const Matrix4& m, double tol = 1e-9) {
    if (std::abs(m.trace() - 1.0) > tol) {
        std::ostringstream os;
        os << "from_matrix: trace " << m.trace().real() << " is not 1";
        throw std::invalid_argument(os.str());
    }
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = r; c < 4; ++c)
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol)
                throw std::invalid_argument(
                    detail::entry_diagnostic("from_matrix: non-Hermitian input", m, r, c));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            if (r != c && r + c != 3 && std::abs(m(r, c)) > tol)
                throw std::invalid_argument(
                    detail::entry_diagnostic("from_matrix: entry outside the X pattern", m, r, c));

    const auto& basis = PauliBasis::instance();
    std::array<double, 7> v{};
    for (std::size_t k = 0; k < 7; ++k) {
        const cplx t = cplx(0.0, 2.0) * (m * basis.lambda[basis.alpha_x[k].lambda_index - 1]).trace();
        if (std::abs(t.imag()) > tol) {
            std::ostringstream os;
            os << "from_matrix: coordinate h" << kCoordLabels[k]
               << " came out non-real (imag " << t.imag() << ")";
            throw std::invalid_argument(os.str());
        }
        v[k] = basis.alpha_x[k].sign * t.real();
    }
    return XCoords::from_array(v);
}

/// Smallest block eigenvalue in closed form; the state is positive
/// semidefinite iff this is >= 0.
inline double min_block_eigenvalue(const XCoords& h) {
    return 0.25 * std::min(1.0 - h.h15 - radius_plus(h), 1.0 + h.h15 - radius_minus(h));
}

/// Positivity in square-root form: both block inequalities
/// radius_plus <= 1 - h15 and radius_minus <= 1 + h15, slackened by tol in
/// eigenvalue units so the test agrees with a min-eigenvalue check at the
/// same threshold.
inline bool is_physical(const XCoords& h, double tol = 1e-9) {
    return min_block_eigenvalue(h) >= -tol;
}

/// The squared variant of the positivity inequalities, with both sides
/// squared and the sign pairing aligned.  Kept because it is subtly wrong:
/// it accepts points such as h15 = 1.2 (rest zero) whose density matrix has
/// eigenvalue -0.05.  Regression tests pin the disagreement.
inline bool positivity_squared_form(const XCoords& h) {
    const double rp2 = radius_plus(h) * radius_plus(h);
    const double rm2 = radius_minus(h) * radius_minus(h);
    return rp2 <= (1.0 + h.h15) * (1.0 + h.h15) && rm2 <= (1.0 - h.h15) * (1.0 - h.h15);
}

/// Four eigenvalues grouped into two within-block descending pairs:
/// (r1, r2) from the radius_plus block, (r3, r4) from the radius_minus block.
/// complete_order additionally reports 1 >= r1 >= r2 >= r3 >= r4 >= 0.
struct Spectrum {
    std::array<double, 4> r{};
    bool complete_order = false;

    double sum() const { return r[0] + r[1] + r[2] + r[3]; }
    /// The within-pair order every constructor establishes.
    bool partial_order() const { return r[0] >= r[1] && r[2] >= r[3]; }
};

namespace detail {
inline bool complete_order_holds(const std::array<double, 4>& r) {
    return 1.0 >= r[0] && r[0] >= r[1] && r[1] >= r[2] && r[2] >= r[3] && r[3] >= 0.0;
}
} // namespace detail

/// Closed-form spectrum (1/4)[(1 - h15) +/- radius_plus],
/// (1/4)[(1 + h15) +/- radius_minus].  Defined for unphysical coordinates
/// too, where entries may be negative.
inline Spectrum spectrum_analytic(const XCoords& h) {
    const double rp = radius_plus(h);
    const double rm = radius_minus(h);
    Spectrum s;
    s.r = {0.25 * (1.0 - h.h15 + rp), 0.25 * (1.0 - h.h15 - rp),
           0.25 * (1.0 + h.h15 + rm), 0.25 * (1.0 + h.h15 - rm)};
    s.complete_order = detail::complete_order_holds(s.r);
    return s;
}

/// Sorts within the (r1, r2) and (r3, r4) pairs only and reports whether the
/// complete order also happens to hold.  Requires sum 1 within 1e-9.
inline Spectrum simplex_order(const std::array<double, 4>& raw) {
    const double sum = raw[0] + raw[1] + raw[2] + raw[3];
    if (std::abs(sum - 1.0) > 1e-9) {
        std::ostringstream os;
        os << "simplex_order: values sum to " << sum << ", not 1";
        throw std::invalid_argument(os.str());
    }
    Spectrum s;
    s.r = raw;
    if (s.r[0] < s.r[1]) std::swap(s.r[0], s.r[1]);
    if (s.r[2] < s.r[3]) std::swap(s.r[2], s.r[3]);
    s.complete_order = detail::complete_order_holds(s.r);
    return s;
}

struct DiagonalizationResult {
    Spectrum spectrum;
    GlobalElement element;
    double residual = 0.0; // max-norm deviation of the conjugated matrix
                           // from diag(r1, r4, r3, r2)
};

/// Conjugates a physical state to diagonal form with a group element built
/// from the two block diagonalizers (relative phase fixed to zero).  The
/// conjugated matrix is diag(r1, r4, r3, r2): the radius_plus pair lands on
/// the corners, both pairs descending.
inline DiagonalizationResult diagonalize(const XCoords& h, double tol = 1e-9) {
    if (!is_physical(h, tol))
        throw std::domain_error("diagonalize: coordinates are not a physical state");

    const Matrix4 rho = to_matrix(h);
    const Matrix4 w = pi_frame(rho);
    const Matrix2 ua = su2_diagonalizer(block_a(w), tol);
    const Matrix2 ub = su2_diagonalizer(block_b(w), tol);

    DiagonalizationResult out;
    out.element = GlobalElement{0.0, su2_log(ua), su2_log(ub)};

    const Matrix4 conj = adjoint(realize_global(out.element), rho, tol);
    out.spectrum.r = {conj(0, 0).real(), conj(3, 3).real(), conj(2, 2).real(), conj(1, 1).real()};
    out.spectrum.complete_order = detail::complete_order_holds(out.spectrum.r);

    Matrix4 expected;
    expected(0, 0) = out.spectrum.r[0];
    expected(1, 1) = out.spectrum.r[3];
    expected(2, 2) = out.spectrum.r[2];
    expected(3, 3) = out.spectrum.r[1];
    out.residual = (conj - expected).max_abs();
    return out;
}

} // namespace xstrata
