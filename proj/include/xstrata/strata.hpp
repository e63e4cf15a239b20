#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string_view>

#include "xstrata/eigen.hpp"
#include "xstrata/matrix.hpp"
#include "xstrata/pauli.hpp"
#include "xstrata/xstate.hpp"

namespace xstrata {

/// Orbit tangent vectors t_k = [g_k, rho] over the seven signed generators.
/// Each is Hermitian and traceless.
struct TangentFrame {
    std::array<Matrix4, 7> vectors;
};

inline TangentFrame tangent_frame(const XCoords& h) {
    const Matrix4 rho = to_matrix(h);
    const auto& gen = PauliBasis::instance().generators;
    TangentFrame f;
    for (std::size_t k = 0; k < 7; ++k) f.vectors[k] = commutator(gen[k], rho);
    return f;
}

inline double rank_threshold(double tol) { return std::max(1e-12, tol * tol / 8.0); }

/// 7x7 Gram matrix G_kl = (1/2) Tr(t_k t_l) of the tangent frame, its numeric
/// spectrum, and the closed-form double eigenvalues
/// mu_pm = (1/8)[(h3 +/- h6)^2 + (h8 +/- h10)^2 + (h7 +/- h11)^2].
/// The numeric spectrum is {mu+, mu+, mu-, mu-, 0, 0, 0}; the rank (= orbit
/// dimension) is counted against rank_threshold(tol).
struct GramAnalysis {
    SymMatrix<7> gram;
    std::array<double, 7> spectrum{}; // numeric, descending
    double mu_plus = 0.0;
    double mu_minus = 0.0;
    int rank = 0;
    int orbit_dim = 0;
};

inline GramAnalysis gram_global(const XCoords& h, double tol = 1e-9) {
    const TangentFrame f = tangent_frame(h);
    GramAnalysis g;
    for (std::size_t k = 0; k < 7; ++k)
        for (std::size_t l = k; l < 7; ++l)
            g.gram.set(k, l, 0.5 * (f.vectors[k] * f.vectors[l]).trace().real());
    g.spectrum = symmetric_eigen(g.gram);

    const double rp = radius_plus(h);
    const double rm = radius_minus(h);
    g.mu_plus = rp * rp / 8.0;
    g.mu_minus = rm * rm / 8.0;

    const double thr = rank_threshold(tol);
    for (double e : g.spectrum)
        if (e > thr) ++g.rank;
    g.orbit_dim = g.rank;
    return g;
}

/// 2x2 Gram over {t_3, t_6} with closed-form eigenvalues
/// mu1 = (1/8)[(h8+h10)^2 + (h7+h11)^2], mu2 = (1/8)[(h8-h10)^2 + (h7-h11)^2].
struct LocalGramAnalysis {
    SymMatrix<2> gram;
    std::array<double, 2> spectrum{}; // numeric, descending
    double mu1 = 0.0;
    double mu2 = 0.0;
    int rank = 0;
    int orbit_dim = 0;
};

inline LocalGramAnalysis gram_local(const XCoords& h, double tol = 1e-9) {
    const Matrix4 rho = to_matrix(h);
    const auto& gen = PauliBasis::instance().generators;
    const Matrix4 t3 = commutator(gen[0], rho);
    const Matrix4 t6 = commutator(gen[1], rho);

    LocalGramAnalysis g;
    g.gram.set(0, 0, 0.5 * (t3 * t3).trace().real());
    g.gram.set(0, 1, 0.5 * (t3 * t6).trace().real());
    g.gram.set(1, 1, 0.5 * (t6 * t6).trace().real());
    g.spectrum = symmetric_eigen(g.gram);

    g.mu1 = ((h.h8 + h.h10) * (h.h8 + h.h10) + (h.h7 + h.h11) * (h.h7 + h.h11)) / 8.0;
    g.mu2 = ((h.h8 - h.h10) * (h.h8 - h.h10) + (h.h7 - h.h11) * (h.h7 - h.h11)) / 8.0;

    const double thr = rank_threshold(tol);
    for (double e : g.spectrum)
        if (e > thr) ++g.rank;
    g.orbit_dim = g.rank;
    return g;
}

enum class GlobalStratum { Generic, DegeneratePlus, DegenerateMinus, Central };
enum class LocalStratum { Generic, DegenPlus, DegenMinus, Exceptional };

inline std::string_view to_string(GlobalStratum s) {
    switch (s) {
        case GlobalStratum::Generic: return "Generic[H]";
        case GlobalStratum::DegeneratePlus: return "DegeneratePlus[H+]";
        case GlobalStratum::DegenerateMinus: return "DegenerateMinus[H-]";
        case GlobalStratum::Central: return "Central[H0]";
    }
    return "?";
}

inline std::string_view to_string(LocalStratum s) {
    switch (s) {
        case LocalStratum::Generic: return "Generic[I]";
        case LocalStratum::DegenPlus: return "DegenPlus[H_L+]";
        case LocalStratum::DegenMinus: return "DegenMinus[H_L-]";
        case LocalStratum::Exceptional: return "Exceptional[LG_X]";
    }
    return "?";
}

inline int orbit_dimension(GlobalStratum s) {
    switch (s) {
        case GlobalStratum::Generic: return 4;
        case GlobalStratum::DegeneratePlus:
        case GlobalStratum::DegenerateMinus: return 2;
        case GlobalStratum::Central: return 0;
    }
    return -1;
}

inline int orbit_dimension(LocalStratum s) {
    switch (s) {
        case LocalStratum::Generic: return 2;
        case LocalStratum::DegenPlus:
        case LocalStratum::DegenMinus: return 1;
        case LocalStratum::Exceptional: return 0;
    }
    return -1;
}

/// Stratum of the full-group action.  The mu magnitudes are compared against
/// tol^2 / 8 so that tol keeps coordinate units (mu is quadratic in the
/// coordinates).  Requires a physical state.
inline GlobalStratum classify_global(const XCoords& h, double tol = 1e-9) {
    if (!is_physical(h, tol))
        throw std::domain_error("classify_global: coordinates are not a physical state");
    const double thr = tol * tol / 8.0;
    const double rp = radius_plus(h), rm = radius_minus(h);
    const bool plus_zero = rp * rp / 8.0 <= thr;
    const bool minus_zero = rm * rm / 8.0 <= thr;
    if (plus_zero && minus_zero) return GlobalStratum::Central;
    if (plus_zero) return GlobalStratum::DegeneratePlus;
    if (minus_zero) return GlobalStratum::DegenerateMinus;
    return GlobalStratum::Generic;
}

/// Stratum of the local (single-qubit phase) action.  The exceptional stratum
/// h7 = h8 = h10 = h11 = 0 is tested first, coordinatewise against tol.
inline LocalStratum classify_local(const XCoords& h, double tol = 1e-9) {
    if (!is_physical(h, tol))
        throw std::domain_error("classify_local: coordinates are not a physical state");
    if (std::abs(h.h7) <= tol && std::abs(h.h8) <= tol && std::abs(h.h10) <= tol &&
        std::abs(h.h11) <= tol)
        return LocalStratum::Exceptional;
    const double thr = tol * tol / 8.0;
    const double mu1 = ((h.h8 + h.h10) * (h.h8 + h.h10) + (h.h7 + h.h11) * (h.h7 + h.h11)) / 8.0;
    const double mu2 = ((h.h8 - h.h10) * (h.h8 - h.h10) + (h.h7 - h.h11) * (h.h7 - h.h11)) / 8.0;
    if (mu2 <= thr) return LocalStratum::DegenPlus;
    if (mu1 <= thr) return LocalStratum::DegenMinus;
    return LocalStratum::Generic;
}

/// Per-stratum counts for a batch of physical states, both actions.  Indexed
/// by the enum values.
struct DecomposeReport {
    std::array<std::size_t, 4> global_counts{};
    std::array<std::size_t, 4> local_counts{};
    std::size_t total = 0;
};

inline DecomposeReport decompose_report(std::span<const XCoords> samples, double tol = 1e-9) {
    DecomposeReport r;
    for (const XCoords& h : samples) {
        ++r.global_counts[static_cast<std::size_t>(classify_global(h, tol))];
        ++r.local_counts[static_cast<std::size_t>(classify_local(h, tol))];
        ++r.total;
    }
    return r;
}

} // namespace xstrata
