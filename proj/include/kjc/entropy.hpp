#ifndef KJC_ENTROPY_HPP
#define KJC_ENTROPY_HPP

#include <vector>

#include "kjc/matrix.hpp"
#include "kjc/reduced_states.hpp"

namespace kjc {

/// Eigenvalues below this are treated as exact zeros in entropy sums
/// (lambda*ln(lambda) is numerically indistinguishable from its limit 0).
inline constexpr double kEigenvalueFloor = 1e-15;

/// Entropies at one time sample, in nats. scaled_t is lambda*t/pi.
struct EntropySample {
    double scaled_t = 0.0;
    double S_a = 0.0;
    double S_f = 0.0;
    double lambda_plus = 1.0;
    double lambda_minus = 0.0;
};

struct QubitEntropy {
    double S = 0.0;
    double lambda_plus = 1.0;
    double lambda_minus = 0.0;
};

/// Analytic 2x2 entropy: lambda_pm = (1 pm sqrt((2 rho_ee - 1)^2 + 4 |rho_eg|^2)) / 2.
QubitEntropy qubit_entropy(const AtomState& a);

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column i pairs with values[i]; empty unless requested
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix. Terminates
/// when the off-diagonal Frobenius norm drops below 1e-13 * ||M||_F; throws
/// eigensolver_error after 100 sweeps.
EigenSystem jacobi_eigensystem(ComplexMatrix m, bool want_vectors = false);

/// Eigenvalues of a Hermitian matrix, sorted descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// -sum lambda ln lambda over the given spectrum, flooring tiny values and
/// rejecting eigenvalues below -1e-9 as a positivity failure.
double entropy_from_spectrum(const std::vector<double>& eigenvalues);

/// Field entropy through the small Gram matrix F^dagger F (same nonzero
/// spectrum as the dense rho = F F^dagger, at most 2*#branches dimensions).
double field_entropy(const FieldDensity& f);

/// Field entropy through the dense matrix; slow verification path.
double field_entropy_dense(const FieldDensity& f);

} // namespace kjc

#endif
