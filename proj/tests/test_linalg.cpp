#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "xstrata/eigen.hpp"
#include "xstrata/matrix.hpp"
#include "xstrata/pauli.hpp"

using namespace xstrata;

namespace {

// Independent Kronecker oracle: expands by the index formula without going
// through tensor_product.
Matrix4 kron_oracle(const Matrix2& a, const Matrix2& b) {
    Matrix4 m;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m(r, c) = a(r / 2, c / 2) * b(r % 2, c % 2);
    return m;
}

Matrix4 random_hermitian4(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Matrix4 m;
    for (std::size_t r = 0; r < 4; ++r) {
        m(r, r) = d(rng);
        for (std::size_t c = r + 1; c < 4; ++c) {
            m(r, c) = cplx(d(rng), d(rng));
            m(c, r) = std::conj(m(r, c));
        }
    }
    return m;
}

Matrix2 random_hermitian2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Matrix2 m;
    m(0, 0) = d(rng);
    m(1, 1) = d(rng);
    m(0, 1) = cplx(d(rng), d(rng));
    m(1, 0) = std::conj(m(0, 1));
    return m;
}

} // namespace

TEST_CASE("tensor product identities") {
    const auto& s = PauliBasis::instance().sigma;

    CHECK(tensor_product(s[0], s[0]) == Matrix4::identity());

    const Matrix4 zz = tensor_product(s[3], s[3]);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const cplx want = (r == c) ? cplx((r == 0 || r == 3) ? 1.0 : -1.0) : cplx(0.0);
            CHECK(zz(r, c) == want);
        }

    const Matrix4 xx = tensor_product(s[1], s[1]);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) CHECK(xx(r, c) == cplx(r + c == 3 ? 1.0 : 0.0));
}

TEST_CASE("tensor product matches the index-formula oracle") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 50; ++it) {
        const Matrix2 a = random_hermitian2(rng);
        const Matrix2 b = random_hermitian2(rng);
        CHECK((tensor_product(a, b) - kron_oracle(a, b)).max_abs() == 0.0);
    }
}

TEST_CASE("commutators") {
    const auto& basis = PauliBasis::instance();

    std::mt19937_64 rng(12);
    const Matrix4 m = random_hermitian4(rng);
    CHECK(commutator(Matrix4::identity(), m).max_abs() == 0.0);

    // lambda3 and lambda6 act on different qubit factors.
    const Matrix4 direct =
        basis.lambda[2] * basis.lambda[5] - basis.lambda[5] * basis.lambda[2];
    CHECK(direct.max_abs() == 0.0);
    CHECK(commutator(basis.lambda[2], basis.lambda[5]).max_abs() == 0.0);

    // [sigma1, sigma2] = 2i sigma3
    const Matrix2 c12 = commutator(basis.sigma[1], basis.sigma[2]);
    CHECK((c12 - cplx(0.0, 2.0) * basis.sigma[3]).max_abs() == 0.0);
}

TEST_CASE("pauli generator set") {
    const auto& basis = PauliBasis::instance();

    for (const auto& l : basis.lambda) CHECK((l.adjoint() + l).max_abs() == 0.0);

    for (std::size_t k = 0; k < 15; ++k)
        for (std::size_t l = 0; l < 15; ++l) {
            const double want = (k == l) ? -1.0 : 0.0;
            const cplx tr = (basis.lambda[k] * basis.lambda[l]).trace();
            CHECK(std::abs(tr - want) < 1e-14);
        }

    REQUIRE(basis.alpha_x.size() == 7);
    CHECK(basis.alpha_x[5].lambda_index == 11);
    CHECK(basis.alpha_x[5].sign == -1.0);
    for (std::size_t k = 0; k < 7; ++k)
        if (k != 5) CHECK(basis.alpha_x[k].sign == 1.0);
}

TEST_CASE("hermitian_eigen on fixed spectra") {
    Matrix4 d;
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    d(2, 2) = 3.0;
    d(3, 3) = 4.0;
    const auto eg = hermitian_eigen(d);
    CHECK(eg.eigenvalues == std::array<double, 4>{4.0, 3.0, 2.0, 1.0});
    CHECK(eg.eigenvectors.is_unitary(1e-12));

    // (1/4)(I - sigma_zz) = diag(0, 1/2, 1/2, 0)
    const auto& s = PauliBasis::instance().sigma;
    const Matrix4 m = 0.25 * (Matrix4::identity() - tensor_product(s[3], s[3]));
    const auto eg2 = hermitian_eigen(m);
    CHECK(eg2.eigenvalues[0] == Catch::Approx(0.5).margin(1e-14));
    CHECK(eg2.eigenvalues[1] == Catch::Approx(0.5).margin(1e-14));
    CHECK(eg2.eigenvalues[2] == Catch::Approx(0.0).margin(1e-14));
    CHECK(eg2.eigenvalues[3] == Catch::Approx(0.0).margin(1e-14));
}

TEST_CASE("hermitian_eigen reconstructs 1000 seeded random matrices") {
    std::mt19937_64 rng(1234);
    double worst = 0.0;
    for (int it = 0; it < 1000; ++it) {
        const Matrix4 m = random_hermitian4(rng);
        const auto eg = hermitian_eigen(m);
        for (std::size_t i = 0; i + 1 < 4; ++i) CHECK(eg.eigenvalues[i] >= eg.eigenvalues[i + 1]);
        Matrix4 d;
        for (std::size_t i = 0; i < 4; ++i) d(i, i) = eg.eigenvalues[i];
        const Matrix4 back = eg.eigenvectors * d * eg.eigenvectors.adjoint();
        worst = std::max(worst, (back - m).max_abs());
        CHECK(eg.eigenvectors.is_unitary(1e-12));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input with a diagnostic") {
    Matrix4 m;
    m(0, 1) = cplx(0.3, 0.1);
    m(1, 0) = cplx(0.3, 0.2); // not the conjugate
    CHECK_THROWS_WITH(hermitian_eigen(m), Catch::Matchers::ContainsSubstring("(0,1)"));
}

TEST_CASE("symmetric_eigen") {
    CHECK(symmetric_eigen(SymMatrix<7>{}) == std::array<double, 7>{});

    SymMatrix<2> d;
    d.set(0, 0, 5.0);
    d.set(1, 1, 1.0);
    CHECK(symmetric_eigen(d) == std::array<double, 2>{5.0, 1.0});

    // random symmetric 7x7: eigenvalue sum/sum-of-squares match trace identities
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int it = 0; it < 50; ++it) {
        SymMatrix<7> m;
        for (std::size_t r = 0; r < 7; ++r)
            for (std::size_t c = r; c < 7; ++c) m.set(r, c, u(rng));
        const auto ev = symmetric_eigen(m);
        double tr = 0.0, tr2 = 0.0, evs = 0.0, evs2 = 0.0;
        for (std::size_t r = 0; r < 7; ++r) {
            tr += m(r, r);
            for (std::size_t c = 0; c < 7; ++c) tr2 += m(r, c) * m(c, r);
        }
        for (double e : ev) {
            evs += e;
            evs2 += e * e;
        }
        CHECK(evs == Catch::Approx(tr).margin(1e-12));
        CHECK(evs2 == Catch::Approx(tr2).margin(1e-11));
    }
}

TEST_CASE("su2_diagonalizer basics") {
    Matrix2 d;
    d(0, 0) = 2.0;
    d(1, 1) = -1.0;
    CHECK(su2_diagonalizer(d) == Matrix2::identity());

    // sigma1 -> sigma3
    const auto& s = PauliBasis::instance().sigma;
    const Matrix2 u = su2_diagonalizer(s[1]);
    const cplx det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    CHECK(std::abs(det - 1.0) < 1e-12);
    CHECK((u * s[1] * u.adjoint() - s[3]).max_abs() < 1e-14);

    // any multiple of the identity: tie broken to the identity
    CHECK(su2_diagonalizer(cplx(0.7, 0.0) * Matrix2::identity()) == Matrix2::identity());
}

TEST_CASE("su2_diagonalizer properties on 1000 random inputs") {
    std::mt19937_64 rng(55);
    for (int it = 0; it < 1000; ++it) {
        const Matrix2 m = random_hermitian2(rng);
        const Matrix2 u = su2_diagonalizer(m);
        const cplx det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
        CHECK(std::abs(det - 1.0) < 1e-12);
        const Matrix2 c = u * m * u.adjoint();
        CHECK(std::abs(c(0, 1)) < 1e-12);
        CHECK(std::abs(c(1, 0)) < 1e-12);
        CHECK(c(0, 0).real() >= c(1, 1).real());
    }
}
