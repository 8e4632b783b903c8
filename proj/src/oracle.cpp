#include "kjc/oracle.hpp"

#include <cmath>
#include <numbers>

#include "kjc/parallel.hpp"

namespace kjc {


TruncatedHamiltonian::TruncatedHamiltonian(const ModelParams& p, std::size_t n_max)
    : params_(p), n_max_(n_max), h_(2 * (n_max + 1)) {
    if (n_max < p.k) throw domain_error("build_hamiltonian: n_max must be >= k");

    const double b1 = p.beta1();
    const double b2 = p.beta2();
    for (std::size_t n = 0; n <= n_max_; ++n) {
        h_(e_index(n), e_index(n)) = p.omega * double(n) + 0.5 * p.omega0 + b2 * double(n);
        h_(g_index(n), g_index(n)) = p.omega * double(n) - 0.5 * p.omega0 + b1 * double(n);
    }
    // k-quanta coupling band: <n,e|H|n+k,g> = lambda sqrt((n+k)!/n!).
    for (std::size_t n = 0; n + p.k <= n_max_; ++n) {
        const double tau = rabi_parameters(p, n).tau;
        h_(e_index(n), g_index(n + p.k)) = tau;
        h_(g_index(n + p.k), e_index(n)) = tau;
    }
}

const EigenSystem& TruncatedHamiltonian::eigensystem() const {
    if (!decomposed_) {
        eig_ = jacobi_eigensystem(h_, true);
        decomposed_ = true;
    }
    return eig_;
}

TruncatedHamiltonian build_hamiltonian(const ModelParams& p, std::size_t n_max) {
    return TruncatedHamiltonian(p, n_max);
}

std::vector<cplx> propagate(const TruncatedHamiltonian& h, const std::vector<cplx>& psi0,
                            double t) {
    const EigenSystem& es = h.eigensystem();
    std::vector<cplx> w = adjoint_matvec(es.vectors, psi0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double phase = -es.values[i] * t;
        w[i] *= cplx(std::cos(phase), std::sin(phase));
    }
    return matvec(es.vectors, w);
}

ComplexMatrix propagate(const TruncatedHamiltonian& h, const ComplexMatrix& rho0, double t) {
    const std::size_t d = h.dim();
    if (rho0.dim() != d) throw dimension_error("propagate: density matrix dimension mismatch");
    if (std::abs(rho0.trace() - 1.0) > 1e-9)
        throw domain_error("propagate: initial state must have unit trace");
    if (rho0.max_hermiticity_defect() > 1e-10)
        throw domain_error("propagate: initial state must be Hermitian");

    const EigenSystem& es = h.eigensystem();
    const ComplexMatrix& v = es.vectors;

    // W = V^dagger rho0 V, then rho(t) = V diag(e^-iEt) W diag(e^+iEt) V^dagger
    ComplexMatrix tmp(d), w(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            cplx acc = 0.0;
            for (std::size_t r = 0; r < d; ++r) acc += std::conj(v(r, i)) * rho0(r, j);
            tmp(i, j) = acc;
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            cplx acc = 0.0;
            for (std::size_t r = 0; r < d; ++r) acc += tmp(i, r) * v(r, j);
            w(i, j) = acc;
        }

    std::vector<cplx> ph(d);
    for (std::size_t i = 0; i < d; ++i) {
        const double phase = -es.values[i] * t;
        ph[i] = cplx(std::cos(phase), std::sin(phase));
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) w(i, j) *= ph[i] * std::conj(ph[j]);

    ComplexMatrix out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            cplx acc = 0.0;
            for (std::size_t r = 0; r < d; ++r) acc += v(i, r) * w(r, j);
            tmp(i, j) = acc;
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            cplx acc = 0.0;
            for (std::size_t r = 0; r < d; ++r) acc += tmp(i, r) * std::conj(v(j, r));
            out(i, j) = acc;
        }
    return out;
}

OracleRun oracle_entropies(const ModelParams& p, const FieldPrep& prep,
                           const std::vector<double>& t_grid, unsigned threads,
                           double tail_tol) {
    // Stricter truncation than production so band-edge leakage cannot
    // masquerade as closed-form error.
    const std::size_t n_prod = choose_truncation(prep.alpha, p.k, tail_tol);
    const std::size_t n_orc = n_prod + 2 * p.k;
    const CoherentAmplitudes q = coherent_amplitudes(prep.alpha, n_orc);
    const PreparedField field = prepare_field(prep, q);

    TruncatedHamiltonian h(p, n_orc);
    h.eigensystem(); // decompose once, up front

    struct BranchVector {
        double weight;
        std::vector<cplx> psi0;
    };
    std::vector<BranchVector> branches;
    for (const FieldBranch& b : field.branches) {
        BranchVector bv;
        bv.weight = b.weight;
        bv.psi0.assign(h.dim(), cplx(0.0));
        for (std::size_t n = 0; n <= n_orc; ++n) bv.psi0[h.e_index(n)] = q.q[n] * b.c[n];
        branches.push_back(std::move(bv));
    }

    OracleRun run;
    run.samples.assign(t_grid.size(), EntropySample{});
    std::vector<double> edge(t_grid.size(), 0.0);

    auto work = [&](std::size_t i) {
        const double t = t_grid[i];
        const std::size_t fdim = n_orc + 1;

        ComplexMatrix rho(h.dim());
        for (const BranchVector& bv : branches) {
            const std::vector<cplx> psi = propagate(h, bv.psi0, t);
            for (std::size_t a = 0; a < h.dim(); ++a)
                for (std::size_t b = 0; b < h.dim(); ++b)
                    rho(a, b) += bv.weight * psi[a] * std::conj(psi[b]);
        }

        ComplexMatrix rho_a(2);
        for (std::size_t n = 0; n < fdim; ++n) {
            rho_a(0, 0) += rho(h.e_index(n), h.e_index(n));
            rho_a(0, 1) += rho(h.e_index(n), h.g_index(n));
            rho_a(1, 0) += rho(h.g_index(n), h.e_index(n));
            rho_a(1, 1) += rho(h.g_index(n), h.g_index(n));
        }
        rho_a.hermitize();

        ComplexMatrix rho_f(fdim);
        for (std::size_t n = 0; n < fdim; ++n)
            for (std::size_t m = 0; m < fdim; ++m)
                rho_f(n, m) = rho(h.e_index(n), h.e_index(m)) + rho(h.g_index(n), h.g_index(m));
        rho_f.hermitize();

        const std::vector<double> atom_spec = hermitian_eigenvalues(rho_a);
        EntropySample& s = run.samples[i];
        s.scaled_t = p.lambda * t / std::numbers::pi;
        s.lambda_plus = atom_spec[0];
        s.lambda_minus = atom_spec[1];
        s.S_a = entropy_from_spectrum(atom_spec);
        s.S_f = entropy_from_spectrum(hermitian_eigenvalues(rho_f));

        double top = 0.0;
        for (std::size_t n = fdim - p.k; n < fdim; ++n)
            top += rho(h.e_index(n), h.e_index(n)).real() + rho(h.g_index(n), h.g_index(n)).real();
        edge[i] = top;
    };

    parallel_for_indexed(t_grid.size(), threads, work);

    for (double e : edge) run.max_edge_population = std::max(run.max_edge_population, e);
    run.truncation_warning = run.max_edge_population > 1e-10;
    return run;
}

} // namespace kjc
