#include "kjc/evolution.hpp"

#include <cmath>

namespace kjc {

double BranchAmplitudes::total_norm() const {
    double s = 0.0;
    for (const cplx& v : A) s += std::norm(v);
    for (const cplx& v : B) s += std::norm(v);
    return s;
}

BranchAmplitudes branch_amplitudes(const ModelParams& p, const CoherentAmplitudes& q,
                                   const FieldBranch& branch, double t) {
    if (branch.c.size() != q.q.size())
        throw dimension_error("branch_amplitudes: branch/amplitude size mismatch");
    if (t < 0.0) throw domain_error("branch_amplitudes: t must be >= 0");

    const std::size_t dim = q.q.size();
    const double lt = p.lambda * t;

    BranchAmplitudes out;
    out.weight = branch.weight;
    out.t = t;
    out.scaled_t = lt;
    out.A.resize(dim);
    out.B.resize(dim);

    for (std::size_t n = 0; n < dim; ++n) {
        const RabiData rd = rabi_parameters(p, n);
        const double qc = q.q[n] * branch.c[n];
        const double phase = -lt * rd.delta_plus;
        const cplx rot(std::cos(phase), std::sin(phase));
        const double arg = lt * rd.mu_s;
        const double c = std::cos(arg);
        const double s_over_mu = std::sin(arg) / rd.mu_s;
        out.A[n] = qc * rot * cplx(c, -rd.nu_s * s_over_mu);
        out.B[n] = qc * rot * cplx(0.0, -rd.tau_s * s_over_mu);
    }
    return out;
}

std::vector<BranchAmplitudes> all_branch_amplitudes(const ModelParams& p,
                                                    const CoherentAmplitudes& q,
                                                    const PreparedField& field, double t) {
    std::vector<BranchAmplitudes> out;
    out.reserve(field.branches.size());
    for (const FieldBranch& b : field.branches)
        out.push_back(branch_amplitudes(p, q, b, t));
    return out;
}

JointBlocks joint_blocks(const std::vector<BranchAmplitudes>& branches, std::size_t k) {
    if (branches.empty()) throw dimension_error("joint_blocks: no branches");
    const std::size_t dim = branches.front().A.size();
    for (const BranchAmplitudes& b : branches)
        if (b.A.size() != dim || b.B.size() != dim)
            throw dimension_error("joint_blocks: mismatched branch dimensions");

    JointBlocks jb{ComplexMatrix(dim), ComplexMatrix(dim), ComplexMatrix(dim), ComplexMatrix(dim)};
    for (const BranchAmplitudes& b : branches) {
        const double w = b.weight;
        for (std::size_t n = 0; n < dim; ++n) {
            for (std::size_t m = 0; m < dim; ++m) {
                jb.rho1(n, m) += w * b.A[n] * std::conj(b.A[m]);
                if (m >= k) jb.rho2(n, m) += w * b.A[n] * std::conj(b.B[m - k]);
                if (n >= k) jb.rho3(n, m) += w * b.B[n - k] * std::conj(b.A[m]);
                if (n >= k && m >= k) jb.rho4(n, m) += w * b.B[n - k] * std::conj(b.B[m - k]);
            }
        }
    }
    return jb;
}

} // namespace kjc
