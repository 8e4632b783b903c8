#ifndef KJC_DRESSED_MODEL_HPP
#define KJC_DRESSED_MODEL_HPP

#include <cstddef>
#include <utility>

#include "kjc/errors.hpp"

namespace kjc {

/// Physical constants of the k-quanta atom-field model. lambda sets the time
/// unit; delta = Delta/lambda is the scaled detuning. stark_R = 0 means no
/// Stark shift at all; for stark_R > 0 the level shifts are beta1 = lambda*R
/// (ground) and beta2 = lambda/R (excited), i.e. R = sqrt(beta1/beta2) with
/// lambda = sqrt(beta1*beta2).
struct ModelParams {
    double lambda = 1.0;
    double delta = 0.0;
    std::size_t k = 1;
    double stark_R = 0.0;
    double omega = 1.0;
    double omega0 = 1.0;

    double detuning() const { return lambda * delta; } // Delta = omega0 - k*omega
    double beta1() const { return stark_R > 0.0 ? lambda * stark_R : 0.0; }
    double beta2() const { return stark_R > 0.0 ? lambda / stark_R : 0.0; }

    /// omega = 1, omega0 = k*omega + lambda*delta.
    static ModelParams synthesized(double lambda, double delta, std::size_t k, double stark_R);

    /// All six fields supplied; Delta = omega0 - k*omega must agree with
    /// lambda*delta.
    static ModelParams explicit_frequencies(double lambda, double delta, std::size_t k,
                                            double stark_R, double omega, double omega0);
};

/// Per-doublet Rabi parameters, both dimensionful (nu, tau, mu) and in units
/// of lambda (nu_s, tau_s, mu_s), plus the Stark phase/detuning functions
/// delta_plus/delta_minus and the mixing angle theta.
struct RabiData {
    std::size_t n = 0;
    double nu = 0.0;
    double tau = 0.0;
    double mu = 0.0;
    double nu_s = 0.0;
    double tau_s = 0.0;
    double mu_s = 0.0;
    double delta_plus = 0.0;
    double delta_minus = 0.0;
    double theta = 0.0;
};

RabiData rabi_parameters(const ModelParams& p, std::size_t n);

/// theta_n = asin(tau / sqrt((nu - mu)^2 + tau^2)), in (0, pi/2).
double mixing_angle(const RabiData& rd);

/// Dressed doublet energies E+/E- of the n-th ladder rung.
std::pair<double, double> eigenvalues(const ModelParams& p, std::size_t n);

/// Energy of the uncoupled |s,g> state, 0 <= s < k.
double ground_ladder_energy(const ModelParams& p, std::size_t s);

} // namespace kjc

#endif
