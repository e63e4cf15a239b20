#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace xstrata {

using cplx = std::complex<double>;

/// Dense complex square matrix of fixed compile-time dimension (2 or 4 in
/// practice).  Row-major storage, value semantics.  Size mismatches are type
/// errors, not runtime checks.
template <std::size_t N>
class SquareMatrix {
public:
    constexpr SquareMatrix() = default;

    static SquareMatrix identity() {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    static constexpr std::size_t dim() { return N; }

    cplx& operator()(std::size_t r, std::size_t c) { return e_[r * N + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return e_[r * N + c]; }

    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix m;
        for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = a.e_[i] + b.e_[i];
        return m;
    }
    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix m;
        for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = a.e_[i] - b.e_[i];
        return m;
    }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix m;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t k = 0; k < N; ++k) {
                const cplx ark = a(r, k);
                if (ark == 0.0) continue;
                for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
            }
        return m;
    }
    friend SquareMatrix operator*(cplx s, const SquareMatrix& a) {
        SquareMatrix m;
        for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = s * a.e_[i];
        return m;
    }
    friend SquareMatrix operator*(double s, const SquareMatrix& a) { return cplx(s, 0.0) * a; }

    SquareMatrix adjoint() const {
        SquareMatrix m;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    /// Largest entry magnitude (max norm).
    double max_abs() const {
        double m = 0.0;
        for (const cplx& v : e_) m = std::max(m, std::abs(v));
        return m;
    }

    bool is_hermitian(double tol) const {
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = r; c < N; ++c)
                if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
        return true;
    }

    bool is_unitary(double tol) const {
        const SquareMatrix p = *this * adjoint();
        return (p - identity()).max_abs() <= tol;
    }

    bool is_diagonal(double tol) const {
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c)
                if (r != c && std::abs((*this)(r, c)) > tol) return false;
        return true;
    }

    bool operator==(const SquareMatrix&) const = default;

private:
    std::array<cplx, N * N> e_{};
};

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;

/// Kronecker product of two single-qubit operators, row-major block layout:
/// (a ⊗ b)(2i+j, 2k+l) = a(i,k) b(j,l).
inline Matrix4 tensor_product(const Matrix2& a, const Matrix2& b) {
    Matrix4 m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t l = 0; l < 2; ++l)
                    m(2 * i + j, 2 * k + l) = a(i, k) * b(j, l);
    return m;
}

template <std::size_t N>
SquareMatrix<N> commutator(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
    return a * b - b * a;
}

/// Real symmetric matrix; set() writes both mirror entries so symmetry is
/// exact by construction.
template <std::size_t N>
class SymMatrix {
public:
    constexpr SymMatrix() = default;

    static constexpr std::size_t dim() { return N; }

    double operator()(std::size_t r, std::size_t c) const { return e_[r * N + c]; }

    void set(std::size_t r, std::size_t c, double v) {
        e_[r * N + c] = v;
        e_[c * N + r] = v;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : e_) m = std::max(m, std::abs(v));
        return m;
    }

    bool operator==(const SymMatrix&) const = default;

private:
    std::array<double, N * N> e_{};
};

namespace detail {

template <std::size_t N>
std::string entry_diagnostic(const char* what, const SquareMatrix<N>& m,
                             std::size_t r, std::size_t c) {
    std::ostringstream os;
    os << what << " at entry (" << r << "," << c << "): value (" << m(r, c).real()
       << "," << m(r, c).imag() << ")";
    return os.str();
}

} // namespace detail

} // namespace xstrata
