#ifndef SSHQST_HAMILTONIAN_HPP
#define SSHQST_HAMILTONIAN_HPP

#include <optional>
#include <vector>

#include "sshqst/model.hpp"

namespace sshqst {

// Real symmetric tridiagonal matrix acting on the single-excitation basis.
// The chain Hamiltonians here have an identically zero diagonal; a nonzero
// diagonal is accepted so chiral_residual can exercise counterexamples.
struct TridiagonalHamiltonian {
    std::vector<double> diagonal;     // length M
    std::vector<double> offdiagonal;  // length M-1

    int dim() const { return static_cast<int>(diagonal.size()); }

    // y = H * x, exploiting tridiagonal structure (O(M)).
    void apply(const std::complex<double>* x, std::complex<double>* y) const;
};

struct Spectrum {
    std::vector<double> eigenvalues;                 // sorted ascending
    std::vector<std::vector<double>> eigenvectors;   // eigenvectors[k] pairs with eigenvalues[k]

    bool has_vectors() const { return !eigenvectors.empty(); }
};

// Single-excitation block of H = sum_x J_x sigma+_x sigma-_{x+1} + h.c.;
// basis state k is the excitation on qubit k+1.
TridiagonalHamiltonian build_single_excitation(const Couplings& c);

// Full spectrum by implicit-shift QL with deflation. Zero off-diagonal
// entries split the matrix into independent blocks and deflate immediately.
// Throws std::runtime_error if an eigenvalue fails to converge in 50 sweeps.
Spectrum eigenvalues(const TridiagonalHamiltonian& h, bool want_vectors = false);

// Eigenvector whose eigenvalue is closest to `target`, as a WaveVector.
// Throws if no eigenvalue is within `tol` of the target.
WaveVector eigenvector_for(const TridiagonalHamiltonian& h, double target,
                           double tol = 1e-6);

// One Spectrum per grid point; disorder offsets (if given) held fixed over theta.
std::vector<Spectrum> spectrum_sweep(const ChainSpec& spec,
                                     const std::vector<double>& theta_grid,
                                     const DisorderRealization* disorder = nullptr);

// Analytic in-gap (edge) energies at theta: {0} for p=2, {+J1, -J1} for p=3.
std::vector<double> analytic_edge_energies(const ChainSpec& spec, double theta);

// Smallest separation, over a theta grid, between each edge eigenvalue and
// the nearest bulk eigenvalue. Edge eigenvalues are located as the spectrum
// entries closest to the analytic edge energies.
double bulk_edge_gap(const ChainSpec& spec, double theta_min, double theta_max,
                     int grid_points, const DisorderRealization* disorder = nullptr);

// max-norm of Gamma H Gamma + H with Gamma = diag((-1)^site); exactly 0 for
// any zero-diagonal tridiagonal matrix.
double chiral_residual(const TridiagonalHamiltonian& h);

// Evenly spaced inclusive grid from lo to hi.
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace sshqst

#endif
