#include "sshqst/protocols.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sshqst {

namespace {
constexpr double kPi = std::numbers::pi;
}

double fidelity(const WaveVector& target, const WaveVector& actual) {
    if (std::abs(target.norm() - 1.0) > 1e-6 || std::abs(actual.norm() - 1.0) > 1e-6)
        throw std::invalid_argument("fidelity: inputs must be unit-norm");
    return std::abs(inner(target, actual));
}

double adiabatic_margin(const ChainSpec& spec, double omega, double theta_min,
                        double theta_max, int gap_grid_points) {
    const double gap = bulk_edge_gap(spec, theta_min, theta_max, gap_grid_points);
    return std::sqrt(spec.g1 * omega) / gap;
}

std::pair<double, double> protocol_theta_range(int p) {
    if (p == 2) return {0.0, kPi};
    if (p == 3) return {kPi / 6.0, kPi / 2.0};
    throw std::invalid_argument("protocol_theta_range: only p=2 and p=3 protocols exist");
}

namespace {

TransferReport run_transfer(const ChainSpec& spec, double omega,
                            const WaveVector& psi0, const WaveVector& target,
                            const DisorderRealization* disorder, const EvolutionConfig& cfg,
                            std::optional<double> precomputed_gap) {
    if (omega <= 0.0) throw std::invalid_argument("transfer: omega must be positive");
    const auto [theta_lo, theta_hi] = protocol_theta_range(spec.p);
    RampSchedule schedule{theta_lo, omega, (theta_hi - theta_lo) / omega};

    TransferReport report;
    report.omega = omega;
    report.t_final = schedule.t_final;
    report.gap = precomputed_gap ? *precomputed_gap
                                 : bulk_edge_gap(spec, theta_lo, theta_hi, 201);
    report.adiabatic_margin = std::sqrt(spec.g1 * omega) / report.gap;
    if (disorder) report.disorder_seed = disorder->seed;

    Trajectory traj = evolve(spec, schedule, disorder, psi0, cfg);
    report.fidelity = fidelity(target, traj.final_state);
    report.norm_drift_max = traj.norm_drift_max;
    report.convergence_deviation = traj.convergence_deviation;
    if (cfg.record_every > 0) report.trajectory = std::move(traj);
    return report;
}

}  // namespace

TransferReport transfer_p2(const ChainSpec& spec, double omega,
                           const DisorderRealization* disorder, const EvolutionConfig& cfg,
                           std::optional<double> precomputed_gap) {
    spec.validate();
    if (spec.p != 2 || spec.qubits % 2 == 0)
        throw std::invalid_argument("transfer_p2: requires p=2 and odd qubit count");
    if (spec.g0 != spec.g1)
        throw std::invalid_argument("transfer_p2: protocol requires g0 = g1");
    return run_transfer(spec, omega, landmark(spec, Landmark::L),
                        landmark(spec, Landmark::R), disorder, cfg, precomputed_gap);
}

TransferReport transfer_p3(const ChainSpec& spec, double omega, EdgeBranch branch,
                           const DisorderRealization* disorder, const EvolutionConfig& cfg,
                           std::optional<double> precomputed_gap) {
    spec.validate();
    if (spec.p != 3 || spec.qubits % 3 != 2)
        throw std::invalid_argument("transfer_p3: requires p=3 and 3N-1 qubits");
    if (spec.g0 != 0.0)
        throw std::invalid_argument("transfer_p3: protocol requires g0 = 0");
    const Landmark start = (branch == EdgeBranch::plus) ? Landmark::Lplus : Landmark::Lminus;
    const Landmark end = (branch == EdgeBranch::plus) ? Landmark::Rplus : Landmark::Rminus;
    if (branch == EdgeBranch::zero)
        throw std::invalid_argument("transfer_p3: branch must be plus or minus");
    return run_transfer(spec, omega, landmark(spec, start), landmark(spec, end), disorder,
                        cfg, precomputed_gap);
}

double payload_fidelity(double single_excitation_fidelity, double alpha_mag,
                        double beta_mag) {
    const double n2 = alpha_mag * alpha_mag + beta_mag * beta_mag;
    if (std::abs(n2 - 1.0) > 1e-6)
        throw std::invalid_argument("payload_fidelity: |alpha|^2 + |beta|^2 must be 1");
    return alpha_mag * alpha_mag * single_excitation_fidelity + beta_mag * beta_mag;
}

}  // namespace sshqst
