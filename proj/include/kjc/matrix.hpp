#ifndef KJC_MATRIX_HPP
#define KJC_MATRIX_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "kjc/errors.hpp"

namespace kjc {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Small enough (dim <= ~400 here)
/// that no blocking or external BLAS is warranted.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

    std::size_t dim() const { return n_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cplx& v : a_) s += std::norm(v);
        return std::sqrt(s);
    }

    double max_hermiticity_defect() const {
        double d = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j)
                d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return d;
    }

    /// A <- (A + A^dagger)/2. Leaves an exactly Hermitian matrix behind.
    void hermitize() {
        for (std::size_t i = 0; i < n_; ++i) {
            (*this)(i, i) = cplx((*this)(i, i).real(), 0.0);
            for (std::size_t j = i + 1; j < n_; ++j) {
                const cplx m = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
                (*this)(i, j) = m;
                (*this)(j, i) = std::conj(m);
            }
        }
    }

  private:
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

/// y = M x
inline std::vector<cplx> matvec(const ComplexMatrix& m, const std::vector<cplx>& x) {
    if (x.size() != m.dim()) throw dimension_error("matvec: size mismatch");
    std::vector<cplx> y(m.dim(), cplx(0.0));
    for (std::size_t i = 0; i < m.dim(); ++i) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < m.dim(); ++j) acc += m(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

/// y = M^dagger x
inline std::vector<cplx> adjoint_matvec(const ComplexMatrix& m, const std::vector<cplx>& x) {
    if (x.size() != m.dim()) throw dimension_error("adjoint_matvec: size mismatch");
    std::vector<cplx> y(m.dim(), cplx(0.0));
    for (std::size_t j = 0; j < m.dim(); ++j) {
        const cplx xj = x[j];
        for (std::size_t i = 0; i < m.dim(); ++i) y[i] += std::conj(m(j, i)) * xj;
    }
    return y;
}

} // namespace kjc

#endif
