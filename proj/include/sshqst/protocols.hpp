#ifndef SSHQST_PROTOCOLS_HPP
#define SSHQST_PROTOCOLS_HPP

#include <optional>

#include "sshqst/dynamics.hpp"
#include "sshqst/edgestates.hpp"

namespace sshqst {

struct TransferReport {
    double fidelity = 0.0;        // F = |<target|psi(t_f)>|
    double t_final = 0.0;
    double omega = 0.0;
    double adiabatic_margin = 0.0;  // sqrt(g1*omega)/gap; < 1 means adiabatic
    double gap = 0.0;               // clean-chain bulk-edge gap over the sweep
    double norm_drift_max = 0.0;
    std::optional<std::uint64_t> disorder_seed;
    std::optional<double> convergence_deviation;
    std::optional<Trajectory> trajectory;  // populated when cfg.record_every > 0
};

// F = |<target|actual>|, vacuum amplitudes included. Throws if either input
// deviates from unit norm by more than 1e-6.
double fidelity(const WaveVector& target, const WaveVector& actual);

// sqrt(g1*omega) / bulk_edge_gap over [theta_min, theta_max].
double adiabatic_margin(const ChainSpec& spec, double omega, double theta_min,
                        double theta_max, int gap_grid_points = 201);

// Single-excitation transfer |L> -> |R> through the p=2 chain: theta ramps
// 0 -> pi over t_f = pi/omega. Requires p=2, odd M, g0 = g1. This fidelity
// equals the full transfer fidelity of any alpha|e>+beta|g> payload: the
// vacuum component is annihilated by H and the edge channel sits at E = 0,
// so no relative phase accumulates.
TransferReport transfer_p2(const ChainSpec& spec, double omega,
                           const DisorderRealization* disorder, const EvolutionConfig& cfg,
                           std::optional<double> precomputed_gap = std::nullopt);

// Bell-pair transfer |L+-> -> |R+-> through the p=3 chain at g0 = 0: theta
// ramps pi/6 -> pi/2 over t_f = (pi/3)/omega. The modulus in F discards the
// branch's global dynamical phase exp(-i Int E dt).
TransferReport transfer_p3(const ChainSpec& spec, double omega, EdgeBranch branch,
                           const DisorderRealization* disorder, const EvolutionConfig& cfg,
                           std::optional<double> precomputed_gap = std::nullopt);

// Diagnostic for the full payload alpha|L>+beta|G>: |alpha|^2 F + |beta|^2,
// the exact full-state fidelity of the p=2 protocol (see transfer_p2).
double payload_fidelity(double single_excitation_fidelity, double alpha_mag,
                        double beta_mag);

// Protocol theta ranges (start, end).
std::pair<double, double> protocol_theta_range(int p);

}  // namespace sshqst

#endif
