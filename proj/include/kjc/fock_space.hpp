#ifndef KJC_FOCK_SPACE_HPP
#define KJC_FOCK_SPACE_HPP

#include <cstddef>
#include <vector>

#include "kjc/errors.hpp"

namespace kjc {

/// Hard ceiling on the truncated Fock dimension. Fields that need more
/// levels than this are rejected rather than silently mangled.
inline constexpr std::size_t kTruncationCap = 400;

/// Default adequacy requirement on the discarded Poisson tail.
inline constexpr double kDefaultTailTol = 1e-14;

/// Truncated coherent-state amplitudes q_n = exp(-alpha^2/2) alpha^n / sqrt(n!),
/// computed by the multiplicative recurrence q_{n+1} = q_n * alpha / sqrt(n+1)
/// so no factorial is ever formed.
struct CoherentAmplitudes {
    double alpha = 0.0;
    std::size_t n_max = 0;
    std::vector<double> q; // length n_max + 1

    double squared_norm() const;
};

/// Initial field preparation: either the normalized superposition
/// (|alpha> + r|-alpha>)/sqrt(A) or the equal-weight statistical mixture
/// of |alpha> and |-alpha>.
struct FieldPrep {
    enum class Kind { superposition, mixture };

    Kind kind = Kind::superposition;
    double r = 0.0; // only meaningful for superposition
    double alpha = 0.0;

    static FieldPrep superposition(double r, double alpha) { return {Kind::superposition, r, alpha}; }
    static FieldPrep coherent(double alpha) { return {Kind::superposition, 0.0, alpha}; }
    static FieldPrep mixture(double alpha) { return {Kind::mixture, 0.0, alpha}; }
};

/// One pure component of the initial field: weight w and per-n factor c_n,
/// so the branch state is sum_n q_n c_n |n>. Branch vectors are rescaled to
/// unit norm after truncation.
struct FieldBranch {
    double weight = 1.0;
    std::vector<double> c;
};

struct PreparedField {
    FieldPrep prep;
    std::vector<FieldBranch> branches;

    std::size_t n_max() const { return branches.empty() ? 0 : branches.front().c.size() - 1; }
};

CoherentAmplitudes coherent_amplitudes(double alpha, std::size_t n_max);

/// Smallest N with Poisson tail sum_{n>N} q_n^2 < tail_tol, plus a margin of
/// k levels for the k-quanta ladder. Throws truncation_error past the cap.
std::size_t choose_truncation(double alpha, std::size_t k, double tail_tol = kDefaultTailTol);

PreparedField prepare_field(const FieldPrep& prep, const CoherentAmplitudes& q);

} // namespace kjc

#endif
