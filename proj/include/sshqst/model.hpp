#ifndef SSHQST_MODEL_HPP
#define SSHQST_MODEL_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace sshqst {

// Static description of a qubit chain with cosine-modulated couplings
//   J_x = g0 + g1*cos(2*pi*x/p + theta),  x = 1..M-1.
// Energies are measured in units of g1, times in 1/g1 (hbar = 1).
struct ChainSpec {
    int p = 2;        // unit-cell period
    int qubits = 9;   // total qubit count M
    double g0 = 1.0;  // coupling offset
    double g1 = 1.0;  // coupling modulation scale

    void validate() const;  // throws std::invalid_argument on bad fields

    // Protocol-shape checks: p=2 wants M odd (M = 2N-1), p=3 wants M = 3N-1.
    bool transfer_compatible() const;
    int cells() const;  // N, number of (possibly truncated) unit cells
};

// The M-1 nearest-neighbor coupling strengths at a fixed theta,
// possibly including disorder offsets.
struct Couplings {
    std::vector<double> values;

    std::size_t bonds() const { return values.size(); }
};

// Linear ramp theta(t) = theta0 + omega*t on t in [0, t_final].
// omega may be negative (reversed sweep); protocols require omega > 0.
struct RampSchedule {
    double theta0 = 0.0;
    double omega = 0.01;
    double t_final = 0.0;

    double theta_at(double t) const { return theta0 + omega * t; }
    void validate() const;
};

// Quenched coupling disorder: static offsets dJ_x = W * delta_x with
// delta_x drawn uniformly from [-0.5, 0.5].
struct DisorderRealization {
    double w = 0.0;
    std::vector<double> offsets;
    std::uint64_t seed = 0;
};

// Complex amplitude vector over the single-excitation basis (one amplitude
// per qubit) plus the amplitude of the zero-excitation state |G>.
struct WaveVector {
    std::vector<std::complex<double>> amplitudes;
    std::complex<double> vacuum = 0.0;

    std::size_t size() const { return amplitudes.size(); }
    double norm() const;
    void normalize();  // throws on zero vector
};

// Conjugate-linear in `a`: <a|b>, vacuum amplitude included.
std::complex<double> inner(const WaveVector& a, const WaveVector& b);

// J_x = g0 + g1*cos(2*pi*x/p + theta) for x = 1..M-1.
Couplings coupling_profile(const ChainSpec& spec, double theta);

// Elementwise c.values + d.offsets; throws on length mismatch.
Couplings apply_disorder(const Couplings& c, const DisorderRealization& d);

// `count` offsets W*delta, delta uniform in [-0.5, 0.5], from mt19937_64
// seeded with `seed`. Pure function of (w, count, seed).
DisorderRealization sample_disorder(double w, std::size_t count, std::uint64_t seed);

// SplitMix64 mixing step; the documented seed-splitting primitive.
std::uint64_t splitmix64(std::uint64_t x);

// Per-sample seed for ensemble runs: masterSeed, W-grid index, sample index
// chained through splitmix64.
std::uint64_t derive_sample_seed(std::uint64_t master, std::uint64_t w_index,
                                 std::uint64_t sample_index);

}  // namespace sshqst

#endif
