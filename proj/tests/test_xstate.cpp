#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <random>

#include "xstrata/eigen.hpp"
#include "xstrata/xstate.hpp"

using namespace xstrata;

namespace {

// Independent oracle: the density matrix written out entry by entry from the
// coordinate expansion, not through the generator sum.
Matrix4 entrywise_oracle(const XCoords& h) {
    Matrix4 m;
    m(0, 0) = 0.25 * (1.0 - h.h3 - h.h6 - h.h15);
    m(1, 1) = 0.25 * (1.0 - h.h3 + h.h6 + h.h15);
    m(2, 2) = 0.25 * (1.0 + h.h3 - h.h6 + h.h15);
    m(3, 3) = 0.25 * (1.0 + h.h3 + h.h6 - h.h15);
    m(0, 3) = 0.25 * cplx(-(h.h7 + h.h11), h.h8 + h.h10);
    m(3, 0) = std::conj(m(0, 3));
    m(1, 2) = 0.25 * cplx(-(h.h7 - h.h11), -(h.h8 - h.h10));
    m(2, 1) = std::conj(m(1, 2));
    return m;
}

XCoords random_coords(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::array<double, 7> v;
    for (double& x : v) x = u(rng);
    return XCoords::from_array(v);
}

std::array<double, 4> sorted_desc(std::array<double, 4> r) {
    std::sort(r.begin(), r.end(), std::greater<double>());
    return r;
}

} // namespace

TEST_CASE("to_matrix fixed points") {
    const Matrix4 mm = to_matrix({});
    for (std::size_t i = 0; i < 4; ++i) CHECK(mm(i, i) == cplx(0.25));
    CHECK(mm.is_diagonal(0.0));

    XCoords h;
    h.h15 = 1.0;
    const Matrix4 m = to_matrix(h);
    CHECK(m(0, 0) == cplx(0.0));
    CHECK(m(1, 1) == cplx(0.5));
    CHECK(m(2, 2) == cplx(0.5));
    CHECK(m(3, 3) == cplx(0.0));
    CHECK(m.is_diagonal(0.0));

    XCoords h3;
    h3.h3 = 0.5;
    const Matrix4 m3 = to_matrix(h3);
    CHECK(std::abs(m3.trace() - 1.0) == 0.0);
    CHECK(m3.is_hermitian(0.0));
}

TEST_CASE("to_matrix equals the entrywise oracle and is exactly X-shaped") {
    std::mt19937_64 rng(100);
    for (int it = 0; it < 200; ++it) {
        const XCoords h = random_coords(rng);
        const Matrix4 m = to_matrix(h);
        CHECK((m - entrywise_oracle(h)).max_abs() < 1e-15);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                if (r != c && r + c != 3) CHECK(m(r, c) == cplx(0.0));
    }
}

TEST_CASE("from_matrix recovers coordinates") {
    Matrix4 quarter;
    for (std::size_t i = 0; i < 4; ++i) quarter(i, i) = 0.25;
    CHECK(from_matrix(quarter) == XCoords{});

    std::mt19937_64 rng(101);
    for (int it = 0; it < 10000; ++it) {
        const XCoords h = random_coords(rng);
        const XCoords back = from_matrix(to_matrix(h));
        const auto a = h.to_array(), b = back.to_array();
        for (std::size_t k = 0; k < 7; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-12);
    }

    // matrix-side round trip
    for (int it = 0; it < 1000; ++it) {
        const Matrix4 m = to_matrix(random_coords(rng));
        CHECK((to_matrix(from_matrix(m)) - m).max_abs() < 1e-12);
    }
}

TEST_CASE("from_matrix structural errors") {
    Matrix4 m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = 0.25;

    Matrix4 bad = m;
    bad(0, 1) = 0.01;
    bad(1, 0) = 0.01;
    CHECK_THROWS_WITH(from_matrix(bad), Catch::Matchers::ContainsSubstring("(0,1)"));

    Matrix4 off_trace = m;
    off_trace(0, 0) = 0.5;
    CHECK_THROWS_WITH(from_matrix(off_trace), Catch::Matchers::ContainsSubstring("trace"));

    Matrix4 non_herm = m;
    non_herm(0, 3) = cplx(0.0, 0.1);
    non_herm(3, 0) = cplx(0.0, 0.1); // conjugate would be (0,-0.1)
    CHECK_THROWS_WITH(from_matrix(non_herm), Catch::Matchers::ContainsSubstring("Hermitian"));
}

TEST_CASE("physicality agrees with the eigenvalue oracle") {
    CHECK(is_physical({}));

    XCoords hot;
    hot.h15 = 1.2;
    CHECK_FALSE(is_physical(hot));
    const auto eg = hermitian_eigen(to_matrix(hot));
    CHECK(eg.eigenvalues[3] == Catch::Approx(-0.05).margin(1e-14));
    // the squared form misses exactly this kind of point
    CHECK(positivity_squared_form(hot));

    XCoords boundary;
    boundary.h3 = 0.5;
    boundary.h6 = 0.5;
    CHECK(is_physical(boundary));
    const auto egb = hermitian_eigen(to_matrix(boundary));
    CHECK(std::abs(egb.eigenvalues[3]) < 1e-14);

    std::mt19937_64 rng(102);
    int disagreements = 0;
    for (int it = 0; it < 10000; ++it) {
        const XCoords h = random_coords(rng);
        const bool closed_form = is_physical(h, 1e-9);
        const bool oracle = hermitian_eigen(to_matrix(h)).eigenvalues[3] >= -1e-9;
        if (closed_form != oracle) ++disagreements;
    }
    CHECK(disagreements == 0);
}

TEST_CASE("analytic spectrum") {
    const Spectrum flat = spectrum_analytic({});
    for (double r : flat.r) CHECK(r == 0.25);
    CHECK(flat.complete_order);

    XCoords h15;
    h15.h15 = 1.0;
    const Spectrum s = spectrum_analytic(h15);
    CHECK(sorted_desc(s.r) == std::array<double, 4>{0.5, 0.5, 0.0, 0.0});

    std::mt19937_64 rng(103);
    int checked = 0;
    while (checked < 1000) {
        const XCoords h = random_coords(rng);
        if (!is_physical(h)) continue;
        ++checked;
        const auto analytic = sorted_desc(spectrum_analytic(h).r);
        const auto numeric = hermitian_eigen(to_matrix(h)).eigenvalues;
        for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(analytic[i] - numeric[i]) < 1e-10);
        CHECK(spectrum_analytic(h).sum() == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("simplex_order") {
    const Spectrum a = simplex_order({0.1, 0.4, 0.3, 0.2});
    CHECK(a.r == std::array<double, 4>{0.4, 0.1, 0.3, 0.2});
    CHECK_FALSE(a.complete_order);

    const Spectrum b = simplex_order({0.4, 0.3, 0.2, 0.1});
    CHECK(b.r == std::array<double, 4>{0.4, 0.3, 0.2, 0.1});
    CHECK(b.complete_order);

    const Spectrum c = simplex_order({0.25, 0.25, 0.25, 0.25});
    CHECK(c.r == std::array<double, 4>{0.25, 0.25, 0.25, 0.25});
    CHECK(c.complete_order);

    CHECK(a.partial_order());
    CHECK(b.partial_order());

    CHECK_THROWS_AS(simplex_order({0.5, 0.5, 0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("diagonalize canonical cases") {
    // already in canonical arrangement diag(r1, r4, r3, r2)
    Matrix4 m;
    m(0, 0) = 0.4;
    m(1, 1) = 0.1;
    m(2, 2) = 0.3;
    m(3, 3) = 0.2;
    const XCoords h = from_matrix(m);
    const DiagonalizationResult d = diagonalize(h);
    CHECK((realize_global(d.element) - Matrix4::identity()).max_abs() < 1e-14);
    CHECK(d.residual < 1e-14);
    const std::array<double, 4> want = {0.4, 0.2, 0.3, 0.1};
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(d.spectrum.r[i] - want[i]) < 1e-15);

    const DiagonalizationResult mixed = diagonalize({});
    CHECK((realize_global(mixed.element) - Matrix4::identity()).max_abs() < 1e-14);
    for (double r : mixed.spectrum.r) CHECK(r == 0.25);
    CHECK(mixed.spectrum.complete_order);

    XCoords h7;
    h7.h7 = 0.3;
    const DiagonalizationResult d7 = diagonalize(h7);
    CHECK(d7.residual < 1e-10);
    CHECK(d7.spectrum.r[0] == Catch::Approx(0.325).margin(1e-12));
    CHECK(d7.spectrum.r[1] == Catch::Approx(0.175).margin(1e-12));
    CHECK(d7.spectrum.r[2] == Catch::Approx(0.325).margin(1e-12));
    CHECK(d7.spectrum.r[3] == Catch::Approx(0.175).margin(1e-12));

    XCoords hot;
    hot.h15 = 1.2;
    CHECK_THROWS_AS(diagonalize(hot), std::domain_error);
}

TEST_CASE("diagonalize on random physical states") {
    std::mt19937_64 rng(104);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int checked = 0;
    while (checked < 1000) {
        std::array<double, 7> v;
        for (double& x : v) x = u(rng);
        const XCoords h = XCoords::from_array(v);
        if (!is_physical(h)) continue;
        ++checked;
        const DiagonalizationResult d = diagonalize(h);
        CHECK(d.residual < 1e-10);
        CHECK(is_in_gx(realize_global(d.element), 1e-9));
        CHECK(d.spectrum.r[0] >= d.spectrum.r[1]);
        CHECK(d.spectrum.r[2] >= d.spectrum.r[3]);
        const auto analytic = sorted_desc(spectrum_analytic(h).r);
        const auto got = sorted_desc(d.spectrum.r);
        for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(analytic[i] - got[i]) < 1e-10);
    }
}
