#ifndef KJC_EVOLUTION_HPP
#define KJC_EVOLUTION_HPP

#include <vector>

#include "kjc/dressed_model.hpp"
#include "kjc/fock_space.hpp"
#include "kjc/matrix.hpp"

namespace kjc {

/// Closed-form amplitudes of one pure branch at time t, in the interaction
/// frame of the free field/atom rotation. A[n] multiplies |n,e> and B[n]
/// multiplies |n+k,g>.
struct BranchAmplitudes {
    double weight = 1.0;
    std::vector<cplx> A;
    std::vector<cplx> B;
    double t = 0.0;        // physical time
    double scaled_t = 0.0; // lambda * t

    double total_norm() const; // sum_n |A_n|^2 + |B_n|^2
};

/// The four Fock-basis blocks of the joint density matrix,
/// rho = [[rho1, rho2], [rho3, rho4]] in (atom e/g) x (field n) ordering.
struct JointBlocks {
    ComplexMatrix rho1, rho2, rho3, rho4;
};

BranchAmplitudes branch_amplitudes(const ModelParams& p, const CoherentAmplitudes& q,
                                   const FieldBranch& branch, double t);

/// Convenience: amplitudes for every branch of a prepared field at time t.
std::vector<BranchAmplitudes> all_branch_amplitudes(const ModelParams& p,
                                                    const CoherentAmplitudes& q,
                                                    const PreparedField& field, double t);

JointBlocks joint_blocks(const std::vector<BranchAmplitudes>& branches, std::size_t k);

} // namespace kjc

#endif
