#pragma once

#include <array>
#include <cstddef>

#include "xstrata/matrix.hpp"

namespace xstrata {

/// Tensorial su(4) basis data: the single-qubit matrices sigma_0..sigma_3,
/// the fifteen anti-Hermitian generators lambda_k = (i/2) sigma_mu (x) sigma_nu
/// in the fixed order (x0, y0, z0, 0x, 0y, 0z, xx, xy, xz, yx, yy, yz, zx, zy,
/// zz), and the signed 7-element sublist generating the X-state algebra:
/// (lambda3, lambda6, lambda7, lambda8, lambda10, -lambda11, lambda15).
/// All entries are exact multiples of 1/2.
struct PauliBasis {
    struct AlphaEntry {
        int lambda_index; // 1-based index into lambda
        double sign;      // +1 or -1
    };

    std::array<Matrix2, 4> sigma;
    std::array<Matrix4, 15> lambda;   // lambda[k-1] = lambda_k
    std::array<AlphaEntry, 7> alpha_x;
    std::array<Matrix4, 7> generators; // sign * lambda, in alpha_x order

    static const PauliBasis& instance();
};

/// Coordinate index labels matching the alpha_x order (h3, h6, h7, h8, h10,
/// h11, h15).
inline constexpr std::array<int, 7> kCoordLabels = {3, 6, 7, 8, 10, 11, 15};

inline const PauliBasis& PauliBasis::instance() {
    static const PauliBasis basis = [] {
        PauliBasis b;
        Matrix2 s0 = Matrix2::identity();
        Matrix2 s1, s2, s3;
        s1(0, 1) = 1.0;
        s1(1, 0) = 1.0;
        s2(0, 1) = cplx(0.0, -1.0);
        s2(1, 0) = cplx(0.0, 1.0);
        s3(0, 0) = 1.0;
        s3(1, 1) = -1.0;
        b.sigma = {s0, s1, s2, s3};

        constexpr std::array<std::array<int, 2>, 15> order = {{{1, 0}, {2, 0}, {3, 0},
                                                               {0, 1}, {0, 2}, {0, 3},
                                                               {1, 1}, {1, 2}, {1, 3},
                                                               {2, 1}, {2, 2}, {2, 3},
                                                               {3, 1}, {3, 2}, {3, 3}}};
        for (std::size_t k = 0; k < 15; ++k)
            b.lambda[k] = cplx(0.0, 0.5) * tensor_product(b.sigma[order[k][0]], b.sigma[order[k][1]]);

        b.alpha_x = {{{3, 1.0}, {6, 1.0}, {7, 1.0}, {8, 1.0}, {10, 1.0}, {11, -1.0}, {15, 1.0}}};
        for (std::size_t k = 0; k < 7; ++k)
            b.generators[k] = b.alpha_x[k].sign * b.lambda[b.alpha_x[k].lambda_index - 1];
        return b;
    }();
    return basis;
}

} // namespace xstrata
