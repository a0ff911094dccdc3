#include "sshqst/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace sshqst {

namespace {

using cvec = std::vector<std::complex<double>>;

// Builds the ramped tridiagonal Hamiltonian without reallocating per step.
struct RampedChain {
    const ChainSpec& spec;
    const RampSchedule& schedule;
    const DisorderRealization* disorder;
    TridiagonalHamiltonian h;

    RampedChain(const ChainSpec& s, const RampSchedule& r, const DisorderRealization* d)
        : spec(s), schedule(r), disorder(d) {
        if (d && static_cast<int>(d->offsets.size()) != s.qubits - 1)
            throw std::invalid_argument("evolve: disorder offsets do not match chain size");
        h.diagonal.assign(s.qubits, 0.0);
        h.offdiagonal.assign(s.qubits - 1, 0.0);
    }

    const TridiagonalHamiltonian& at(double t) {
        const Couplings c = coupling_profile(spec, schedule.theta_at(t));
        for (std::size_t i = 0; i < c.values.size(); ++i)
            h.offdiagonal[i] = c.values[i] + (disorder ? disorder->offsets[i] : 0.0);
        return h;
    }
};

// y = -i * H * x
void apply_generator(const TridiagonalHamiltonian& h, const cvec& x, cvec& y) {
    h.apply(x.data(), y.data());
    for (auto& v : y) v = std::complex<double>(v.imag(), -v.real());
}

// One RK4 step on the excitation amplitudes; scratch buffers supplied by caller.
void rk4_core(RampedChain& chain, cvec& psi, double t, double dt, cvec& k1, cvec& k2,
              cvec& k3, cvec& k4, cvec& tmp) {
    const std::size_t n = psi.size();
    apply_generator(chain.at(t), psi, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + 0.5 * dt * k1[i];
    const TridiagonalHamiltonian& h_mid = chain.at(t + 0.5 * dt);
    apply_generator(h_mid, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + 0.5 * dt * k2[i];
    apply_generator(h_mid, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + dt * k3[i];
    apply_generator(chain.at(t + dt), tmp, k4);
    const double w = dt / 6.0;
    for (std::size_t i = 0; i < n; ++i)
        psi[i] += w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

Trajectory integrate(const ChainSpec& spec, const RampSchedule& schedule,
                     const DisorderRealization* disorder, const WaveVector& psi0,
                     double dt, int record_every) {
    RampedChain chain(spec, schedule, disorder);
    const std::size_t n = psi0.size();
    cvec psi = psi0.amplitudes;
    cvec k1(n), k2(n), k3(n), k4(n), tmp(n);

    Trajectory traj;
    auto snapshot = [&](double t) {
        traj.times.push_back(t);
        traj.states.push_back(WaveVector{psi, psi0.vacuum});
    };
    if (record_every > 0) snapshot(0.0);

    const double vac_norm2 = std::norm(psi0.vacuum);
    auto track_norm = [&]() {
        double s = vac_norm2;
        for (const auto& a : psi) s += std::norm(a);
        const double drift = std::abs(std::sqrt(s) - 1.0);
        if (drift > traj.norm_drift_max) traj.norm_drift_max = drift;
        if (drift > 1e-6)
            throw std::runtime_error(
                "evolve: norm drift exceeded 1e-6; reduce the time step dt");
    };

    // t kept as step*dt (not accumulated) so theta(t) carries no summation drift
    double t = 0.0;
    long step = 0;
    while (t < schedule.t_final) {
        double t_next = static_cast<double>(step + 1) * dt;
        if (t_next >= schedule.t_final) t_next = schedule.t_final;
        rk4_core(chain, psi, t, t_next - t, k1, k2, k3, k4, tmp);
        t = t_next;
        ++step;
        track_norm();
        if (record_every > 0 && (step % record_every == 0 || t >= schedule.t_final))
            snapshot(t);
    }
    traj.final_state = WaveVector{std::move(psi), psi0.vacuum};
    return traj;
}

}  // namespace

TridiagonalHamiltonian hamiltonian_at(const ChainSpec& spec, const RampSchedule& schedule,
                                      const DisorderRealization* disorder, double t) {
    if (t < 0.0 || t > schedule.t_final)
        throw std::out_of_range("hamiltonian_at: t outside [0, t_final]");
    Couplings c = coupling_profile(spec, schedule.theta_at(t));
    if (disorder) c = apply_disorder(c, *disorder);
    return build_single_excitation(c);
}

WaveVector rk4_step(const ChainSpec& spec, const RampSchedule& schedule,
                    const DisorderRealization* disorder, const WaveVector& psi,
                    double t, double dt) {
    RampedChain chain(spec, schedule, disorder);
    const std::size_t n = psi.size();
    cvec amps = psi.amplitudes;
    cvec k1(n), k2(n), k3(n), k4(n), tmp(n);
    rk4_core(chain, amps, t, dt, k1, k2, k3, k4, tmp);
    return WaveVector{std::move(amps), psi.vacuum};
}

Trajectory evolve(const ChainSpec& spec, const RampSchedule& schedule,
                  const DisorderRealization* disorder, const WaveVector& psi0,
                  const EvolutionConfig& cfg) {
    spec.validate();
    schedule.validate();
    if (cfg.dt <= 0.0 || cfg.dt > schedule.t_final)
        throw std::invalid_argument("evolve: need 0 < dt <= t_final");
    if (std::abs(psi0.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("evolve: initial state must be unit-norm");

    Trajectory traj = integrate(spec, schedule, disorder, psi0, cfg.dt, cfg.record_every);
    if (cfg.convergence_check) {
        const Trajectory half = integrate(spec, schedule, disorder, psi0, 0.5 * cfg.dt, 0);
        double dev2 = std::norm(traj.final_state.vacuum - half.final_state.vacuum);
        for (std::size_t i = 0; i < psi0.size(); ++i)
            dev2 += std::norm(traj.final_state.amplitudes[i] - half.final_state.amplitudes[i]);
        traj.convergence_deviation = std::sqrt(dev2);
    }
    return traj;
}

}  // namespace sshqst
