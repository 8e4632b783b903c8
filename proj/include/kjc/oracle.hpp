#ifndef KJC_ORACLE_HPP
#define KJC_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "kjc/dressed_model.hpp"
#include "kjc/entropy.hpp"
#include "kjc/fock_space.hpp"
#include "kjc/matrix.hpp"

namespace kjc {

/// Brute-force reference path: the truncated Hamiltonian as an explicit
/// Hermitian matrix in the product basis
/// [(0,e), ..., (n_max,e), (0,g), ..., (n_max,g)], evolved by exact
/// eigendecomposition. Not a performance path; it exists to cross-check the closed form.
class TruncatedHamiltonian {
  public:
    TruncatedHamiltonian(const ModelParams& p, std::size_t n_max);

    const ModelParams& params() const { return params_; }
    std::size_t n_max() const { return n_max_; }
    std::size_t dim() const { return 2 * (n_max_ + 1); }

    std::size_t e_index(std::size_t n) const { return n; }
    std::size_t g_index(std::size_t n) const { return n_max_ + 1 + n; }

    const ComplexMatrix& matrix() const { return h_; }

    /// Eigendecomposition, computed on first use. Not thread-safe on the
    /// first call; read-only afterwards.
    const EigenSystem& eigensystem() const;

  private:
    ModelParams params_;
    std::size_t n_max_;
    ComplexMatrix h_;
    mutable EigenSystem eig_; // lazy
    mutable bool decomposed_ = false;
};

TruncatedHamiltonian build_hamiltonian(const ModelParams& p, std::size_t n_max);

/// psi(t) = V exp(-i E t) V^dagger psi0
std::vector<cplx> propagate(const TruncatedHamiltonian& h, const std::vector<cplx>& psi0,
                            double t);

/// rho(t) = U rho0 U^dagger; checks trace/Hermiticity of the input.
ComplexMatrix propagate(const TruncatedHamiltonian& h, const ComplexMatrix& rho0, double t);

struct OracleRun {
    std::vector<EntropySample> samples;
    double max_edge_population = 0.0; // worst population within k of the cutoff
    bool truncation_warning = false;
};

/// Full reference pipeline: propagate each field branch, assemble the joint
/// density matrix, take both partial traces, and feed the numeric entropy
/// path. t_grid holds physical times; the oracle truncates 2k levels past the
/// cutoff that tail_tol demands. An inadequate tail_tol is reported through
/// OracleRun::truncation_warning rather than an exception.
OracleRun oracle_entropies(const ModelParams& p, const FieldPrep& prep,
                           const std::vector<double>& t_grid, unsigned threads = 1,
                           double tail_tol = kDefaultTailTol);

} // namespace kjc

#endif
