#include "kjc/dressed_model.hpp"

#include <cmath>
#include <string>

namespace kjc {

namespace {

void validate_common(double lambda, std::size_t k, double stark_R) {
    if (!(lambda > 0.0)) throw domain_error("ModelParams: lambda must be > 0");
    if (k < 1) throw domain_error("ModelParams: k must be >= 1");
    if (stark_R < 0.0) throw domain_error("ModelParams: stark_R must be >= 0");
}

} // namespace

ModelParams ModelParams::synthesized(double lambda, double delta, std::size_t k, double stark_R) {
    validate_common(lambda, k, stark_R);
    ModelParams p;
    p.lambda = lambda;
    p.delta = delta;
    p.k = k;
    p.stark_R = stark_R;
    p.omega = 1.0;
    p.omega0 = double(k) * p.omega + lambda * delta;
    return p;
}

ModelParams ModelParams::explicit_frequencies(double lambda, double delta, std::size_t k,
                                              double stark_R, double omega, double omega0) {
    validate_common(lambda, k, stark_R);
    const double mismatch = std::abs((omega0 - double(k) * omega) - lambda * delta);
    const double scale = std::abs(omega0) + double(k) * std::abs(omega) + std::abs(lambda * delta) + 1.0;
    if (mismatch > 1e-9 * scale)
        throw domain_error("ModelParams: omega0 - k*omega does not match lambda*delta");
    ModelParams p;
    p.lambda = lambda;
    p.delta = delta;
    p.k = k;
    p.stark_R = stark_R;
    p.omega = omega;
    p.omega0 = omega0;
    return p;
}

RabiData rabi_parameters(const ModelParams& p, std::size_t n) {
    RabiData rd;
    rd.n = n;

    // tau_n/lambda = sqrt((n+k)!/n!) via the ratio product, never factorials.
    double t = 1.0;
    for (std::size_t j = 1; j <= p.k; ++j) t *= std::sqrt(double(n + j));
    rd.tau_s = t;
    rd.tau = p.lambda * t;

    if (p.stark_R > 0.0) {
        const double r = p.stark_R;
        rd.delta_plus = (double(n) + r * r * double(n + p.k)) / (2.0 * r);
        rd.delta_minus = (double(n) - r * r * double(n + p.k)) / (2.0 * r);
    }

    rd.nu_s = 0.5 * p.delta + rd.delta_minus;
    rd.nu = p.lambda * rd.nu_s;
    rd.mu_s = std::sqrt(rd.nu_s * rd.nu_s + rd.tau_s * rd.tau_s);
    rd.mu = p.lambda * rd.mu_s;
    rd.theta = mixing_angle(rd);
    return rd;
}

double mixing_angle(const RabiData& rd) {
    const double d = rd.nu - rd.mu;
    return std::asin(rd.tau / std::sqrt(d * d + rd.tau * rd.tau));
}

std::pair<double, double> eigenvalues(const ModelParams& p, std::size_t n) {
    const RabiData rd = rabi_parameters(p, n);
    const double base = p.omega * (double(n) + 0.5 * double(p.k)) + 0.5 * p.omega0 +
                        0.5 * (double(n) * p.beta2() + p.beta1() * double(n + p.k));
    return {base + rd.mu, base - rd.mu};
}

double ground_ladder_energy(const ModelParams& p, std::size_t s) {
    if (s >= p.k)
        throw domain_error("ground_ladder_energy: s must satisfy 0 <= s < k, got s=" +
                           std::to_string(s));
    return double(s) * p.beta1() - 0.5 * p.detuning();
}

} // namespace kjc
