#include "kjc/fock_space.hpp"

#include <cmath>
#include <string>

namespace kjc {

double CoherentAmplitudes::squared_norm() const {
    double s = 0.0;
    for (double v : q) s += v * v;
    return s;
}

CoherentAmplitudes coherent_amplitudes(double alpha, std::size_t n_max) {
    if (alpha < 0.0 || !std::isfinite(alpha))
        throw domain_error("coherent_amplitudes: alpha must be finite and >= 0");

    CoherentAmplitudes out;
    out.alpha = alpha;
    out.n_max = n_max;
    out.q.resize(n_max + 1);
    out.q[0] = std::exp(-0.5 * alpha * alpha);
    for (std::size_t n = 0; n < n_max; ++n)
        out.q[n + 1] = out.q[n] * alpha / std::sqrt(double(n + 1));
    return out;
}

std::size_t choose_truncation(double alpha, std::size_t k, double tail_tol) {
    if (!(tail_tol > 0.0)) throw domain_error("choose_truncation: tail_tol must be > 0");
    if (alpha < 0.0 || !std::isfinite(alpha))
        throw domain_error("choose_truncation: alpha must be finite and >= 0");

    const double mean = alpha * alpha;
    long double p = std::exp((long double)(-mean)); // Poisson weight q_n^2
    long double cumulative = p;
    for (std::size_t n = 0; n + k <= kTruncationCap; ++n) {
        if (1.0L - cumulative < (long double)tail_tol) return n + k;
        p *= mean / (long double)(n + 1);
        cumulative += p;
    }
    throw truncation_error("choose_truncation: alpha=" + std::to_string(alpha) +
                           " needs more than " + std::to_string(kTruncationCap) + " Fock levels");
}

namespace {

// Rescale so that sum_n (q_n c_n)^2 is exactly 1 on the truncated basis.
void normalize_branch(const std::vector<double>& q, FieldBranch& b) {
    double s = 0.0;
    for (std::size_t n = 0; n < q.size(); ++n) s += q[n] * q[n] * b.c[n] * b.c[n];
    if (!(s > 0.0)) throw degenerate_state_error("prepare_field: branch has zero norm");
    const double inv = 1.0 / std::sqrt(s);
    for (double& c : b.c) c *= inv;
}

} // namespace

PreparedField prepare_field(const FieldPrep& prep, const CoherentAmplitudes& q) {
    if (prep.alpha != q.alpha)
        throw domain_error("prepare_field: prep.alpha does not match amplitude table");

    PreparedField out;
    out.prep = prep;
    const std::size_t dim = q.q.size();

    if (prep.kind == FieldPrep::Kind::superposition) {
        const double r = prep.r;
        if (!(r >= -1.0 && r <= 1.0))
            throw domain_error("prepare_field: superposition ratio r must lie in [-1, 1]");
        const double norm_a = 1.0 + r * r + 2.0 * r * std::exp(-2.0 * prep.alpha * prep.alpha);
        if (!(norm_a > 0.0))
            throw degenerate_state_error("prepare_field: normalization A vanishes (odd cat of vacuum)");
        FieldBranch b;
        b.weight = 1.0;
        b.c.resize(dim);
        const double inv_sqrt_a = 1.0 / std::sqrt(norm_a);
        for (std::size_t n = 0; n < dim; ++n)
            b.c[n] = (1.0 + r * ((n % 2 == 0) ? 1.0 : -1.0)) * inv_sqrt_a;
        normalize_branch(q.q, b);
        out.branches.push_back(std::move(b));
    } else {
        // Equal-weight mixture of |alpha> and |-alpha>: two non-interfering
        // pure branches evolved independently.
        for (int sign_branch = 0; sign_branch < 2; ++sign_branch) {
            FieldBranch b;
            b.weight = 0.5;
            b.c.resize(dim);
            for (std::size_t n = 0; n < dim; ++n)
                b.c[n] = (sign_branch == 0 || n % 2 == 0) ? 1.0 : -1.0;
            normalize_branch(q.q, b);
            out.branches.push_back(std::move(b));
        }
    }
    return out;
}

} // namespace kjc
