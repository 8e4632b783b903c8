#include "kjc/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace kjc {

namespace {

double plogp(double x) { return x > kEigenvalueFloor ? x * std::log(x) : 0.0; }

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

} // namespace

QubitEntropy qubit_entropy(const AtomState& a) {
    double disc = (2.0 * a.rho_ee - 1.0) * (2.0 * a.rho_ee - 1.0) +
                  4.0 * std::norm(a.rho_eg);
    if (disc > 1.0) {
        if (disc > 1.0 + 1e-10)
            throw positivity_error("qubit_entropy: atomic state outside the Bloch ball");
        disc = 1.0;
    }
    const double root = std::sqrt(disc);
    QubitEntropy out;
    out.lambda_plus = 0.5 * (1.0 + root);
    out.lambda_minus = 0.5 * (1.0 - root);
    out.S = -plogp(out.lambda_plus) - plogp(out.lambda_minus) + 0.0; // kill -0
    return out;
}

EigenSystem jacobi_eigensystem(ComplexMatrix m, bool want_vectors) {
    const std::size_t n = m.dim();
    EigenSystem es;
    if (n == 0) return es;

    const double scale = m.frobenius_norm();
    if (m.max_hermiticity_defect() > 1e-12 * (1.0 + scale))
        throw domain_error("jacobi_eigensystem: matrix is not Hermitian");
    m.hermitize();

    ComplexMatrix v;
    if (want_vectors) v = ComplexMatrix::identity(n);

    es.values.assign(n, 0.0);
    if (scale == 0.0) {
        es.vectors = std::move(v);
        return es;
    }

    const double tol = 1e-13 * scale;
    const double skip = 0.1 * tol / double(n);
    constexpr int max_sweeps = 100;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(m) < tol) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq_abs = std::abs(m(p, q));
                if (apq_abs <= skip) continue;

                // Phase factor that makes the pivot real, then a standard
                // real rotation on [[a_pp, |a_pq|], [|a_pq|, a_qq]].
                const cplx u = m(p, q) / apq_abs;
                const double tau = (m(q, q).real() - m(p, p).real()) / (2.0 * apq_abs);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx su_conj = s * std::conj(u);

                const double dpp = m(p, p).real() - t * apq_abs;
                const double dqq = m(q, q).real() + t * apq_abs;

                // A <- G^dagger A G with G = [[c, s], [-s*conj(u), c*conj(u)]]
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == p || j == q) continue;
                    const cplx ajp = m(j, p);
                    const cplx ajq = m(j, q);
                    m(j, p) = c * ajp - su_conj * ajq;
                    m(j, q) = s * ajp + c * std::conj(u) * ajq;
                    m(p, j) = std::conj(m(j, p));
                    m(q, j) = std::conj(m(j, q));
                }
                m(p, p) = dpp;
                m(q, q) = dqq;
                m(p, q) = 0.0;
                m(q, p) = 0.0;

                if (want_vectors) {
                    for (std::size_t j = 0; j < n; ++j) {
                        const cplx vjp = v(j, p);
                        const cplx vjq = v(j, q);
                        v(j, p) = c * vjp - su_conj * vjq;
                        v(j, q) = s * vjp + c * std::conj(u) * vjq;
                    }
                }
            }
        }
    }
    if (sweep == max_sweeps && off_diagonal_norm(m) >= tol)
        throw eigensolver_error("jacobi_eigensystem: no convergence after " +
                                std::to_string(max_sweeps) + " sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return m(a, a).real() > m(b, b).real();
    });

    for (std::size_t i = 0; i < n; ++i) es.values[i] = m(order[i], order[i]).real();
    if (want_vectors) {
        es.vectors = ComplexMatrix(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) es.vectors(j, i) = v(j, order[i]);
    }
    return es;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    return jacobi_eigensystem(m, false).values;
}

double entropy_from_spectrum(const std::vector<double>& eigenvalues) {
    double s = 0.0;
    for (double lam : eigenvalues) {
        if (lam < -1e-9)
            throw positivity_error("entropy_from_spectrum: eigenvalue " + std::to_string(lam) +
                                   " below -1e-9");
        s -= plogp(lam);
    }
    // Rounding can push an eigenvalue a hair past 1; the true value is >= 0.
    if (s < 0.0 && s > -1e-12) s = 0.0;
    return s + 0.0; // kill -0
}

double field_entropy(const FieldDensity& f) {
    const std::size_t m = f.factors.size();
    ComplexMatrix gram(m);
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t d = c; d < m; ++d) {
            cplx g = 0.0;
            const std::vector<cplx>& fc = f.factors[c];
            const std::vector<cplx>& fd = f.factors[d];
            for (std::size_t i = 0; i < fc.size(); ++i) g += std::conj(fc[i]) * fd[i];
            gram(c, d) = g;
            gram(d, c) = std::conj(g);
        }
    }
    return entropy_from_spectrum(hermitian_eigenvalues(gram));
}

double field_entropy_dense(const FieldDensity& f) {
    return entropy_from_spectrum(hermitian_eigenvalues(f.dense));
}

} // namespace kjc
