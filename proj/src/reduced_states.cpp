#include "kjc/reduced_states.hpp"

#include <cmath>

namespace kjc {

namespace {

void check_branches(const std::vector<BranchAmplitudes>& branches) {
    if (branches.empty()) throw dimension_error("reduced state: no branches");
    const std::size_t dim = branches.front().A.size();
    const double t = branches.front().t;
    for (const BranchAmplitudes& b : branches) {
        if (b.A.size() != dim || b.B.size() != dim)
            throw dimension_error("reduced state: mismatched branch dimensions");
        if (b.t != t) throw domain_error("reduced state: branches not at a common time");
    }
}

} // namespace

AtomState atom_reduced(const std::vector<BranchAmplitudes>& branches, std::size_t k) {
    check_branches(branches);
    const std::size_t dim = branches.front().A.size();

    AtomState a;
    cplx coherence = 0.0;
    for (const BranchAmplitudes& b : branches) {
        double pop_e = 0.0;
        cplx coh = 0.0;
        for (std::size_t n = 0; n < dim; ++n) {
            pop_e += std::norm(b.A[n]);
            // The |e> and |g> components interfere only at equal photon
            // number: A at Fock n+k pairs with B at ladder index n.
            if (n + k < dim) coh += b.A[n + k] * std::conj(b.B[n]);
        }
        a.rho_ee += b.weight * pop_e;
        coherence += b.weight * coh;
    }
    a.rho_gg = 1.0 - a.rho_ee;
    a.rho_eg = coherence;
    return a;
}

FieldDensity field_reduced(const std::vector<BranchAmplitudes>& branches, std::size_t k) {
    check_branches(branches);
    const std::size_t dim = branches.front().A.size();

    FieldDensity f;
    f.dense = ComplexMatrix(dim);
    for (const BranchAmplitudes& b : branches) {
        const double sw = std::sqrt(b.weight);

        std::vector<cplx> col_a(dim), col_b(dim, cplx(0.0));
        for (std::size_t n = 0; n < dim; ++n) col_a[n] = sw * b.A[n];
        for (std::size_t n = k; n < dim; ++n) col_b[n] = sw * b.B[n - k];

        // (rho_f)_{nm} = A_n A_m^* + B_{n-k} B_{m-k}^*, branch-weighted.
        for (std::size_t n = 0; n < dim; ++n) {
            f.dense(n, n) += cplx(std::norm(col_a[n]) + std::norm(col_b[n]), 0.0);
            for (std::size_t m = n + 1; m < dim; ++m) {
                const cplx v = col_a[n] * std::conj(col_a[m]) + col_b[n] * std::conj(col_b[m]);
                f.dense(n, m) += v;
                f.dense(m, n) += std::conj(v);
            }
        }
        f.factors.push_back(std::move(col_a));
        f.factors.push_back(std::move(col_b));
    }
    return f;
}

double inversion(const AtomState& a) { return a.rho_ee - a.rho_gg; }

} // namespace kjc
