#ifndef SSHQST_DYNAMICS_HPP
#define SSHQST_DYNAMICS_HPP

#include <optional>

#include "sshqst/hamiltonian.hpp"
#include "sshqst/model.hpp"

namespace sshqst {

struct EvolutionConfig {
    double dt = 0.01;          // in 1/g1; >= 100 steps per 1/g1 by default
    int record_every = 0;      // snapshot stride in steps; 0 = final state only
    bool convergence_check = false;  // re-run at dt/2 and report the deviation
};

struct Trajectory {
    std::vector<double> times;
    std::vector<WaveVector> states;
    WaveVector final_state;
    double norm_drift_max = 0.0;  // max |norm(psi) - 1| seen during the run
    // max-norm distance between the dt and dt/2 final states, when checked
    std::optional<double> convergence_deviation;
};

// H(theta0 + omega*t) with static disorder offsets applied.
// Throws std::out_of_range for t outside [0, t_final].
TridiagonalHamiltonian hamiltonian_at(const ChainSpec& spec, const RampSchedule& schedule,
                                      const DisorderRealization* disorder, double t);

// One classical RK4 step of d psi/dt = -i H(t) psi; H is rebuilt exactly at
// t, t + dt/2 and t + dt. The vacuum amplitude is untouched (H |G> = 0).
WaveVector rk4_step(const ChainSpec& spec, const RampSchedule& schedule,
                    const DisorderRealization* disorder, const WaveVector& psi,
                    double t, double dt);

// Fixed-step RK4 from t = 0 to t_final; the last step is shortened to land
// exactly on t_final. Throws std::runtime_error if the norm drifts by more
// than 1e-6 (reduce dt).
Trajectory evolve(const ChainSpec& spec, const RampSchedule& schedule,
                  const DisorderRealization* disorder, const WaveVector& psi0,
                  const EvolutionConfig& cfg);

}  // namespace sshqst

#endif
