#ifndef KJC_REDUCED_STATES_HPP
#define KJC_REDUCED_STATES_HPP

#include <vector>

#include "kjc/evolution.hpp"
#include "kjc/matrix.hpp"

namespace kjc {

/// 2x2 Hermitian reduced atomic density matrix; rho_ge = conj(rho_eg).
struct AtomState {
    double rho_ee = 0.0;
    double rho_gg = 0.0;
    cplx rho_eg = 0.0;
};

/// Reduced field state, kept both as a dense Hermitian matrix and as the
/// low-rank factor F with rho = F F^dagger. F has one column sqrt(w) * v per
/// branch vector (the A vector and the k-shifted B vector), so at most
/// 2 * #branches columns.
struct FieldDensity {
    ComplexMatrix dense;
    std::vector<std::vector<cplx>> factors; // factors[c][n], column-major

    std::size_t rank_bound() const { return factors.size(); }
};

AtomState atom_reduced(const std::vector<BranchAmplitudes>& branches, std::size_t k);

FieldDensity field_reduced(const std::vector<BranchAmplitudes>& branches, std::size_t k);

/// Population difference rho_ee - rho_gg, in [-1, 1].
double inversion(const AtomState& a);

} // namespace kjc

#endif
