#include "sshqst/model.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sshqst {

void ChainSpec::validate() const {
    if (p < 2) throw std::invalid_argument("ChainSpec: period p must be >= 2");
    if (qubits < 2) throw std::invalid_argument("ChainSpec: need at least 2 qubits");
    if (g1 <= 0.0) throw std::invalid_argument("ChainSpec: g1 must be positive");
    if (!std::isfinite(g0) || !std::isfinite(g1))
        throw std::invalid_argument("ChainSpec: couplings must be finite");
}

bool ChainSpec::transfer_compatible() const {
    if (p == 2) return qubits % 2 == 1;
    if (p == 3) return qubits % 3 == 2;
    return false;
}

int ChainSpec::cells() const { return (qubits + p - 1) / p; }

void RampSchedule::validate() const {
    if (!std::isfinite(theta0) || !std::isfinite(omega))
        throw std::invalid_argument("RampSchedule: parameters must be finite");
    if (omega == 0.0) throw std::invalid_argument("RampSchedule: omega must be nonzero");
    if (t_final <= 0.0) throw std::invalid_argument("RampSchedule: t_final must be positive");
}

double WaveVector::norm() const {
    double s = std::norm(vacuum);
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

void WaveVector::normalize() {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("WaveVector: cannot normalize zero vector");
    vacuum /= n;
    for (auto& a : amplitudes) a /= n;
}

std::complex<double> inner(const WaveVector& a, const WaveVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("inner: dimension mismatch");
    std::complex<double> s = std::conj(a.vacuum) * b.vacuum;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return s;
}

Couplings coupling_profile(const ChainSpec& spec, double theta) {
    spec.validate();
    Couplings c;
    c.values.resize(static_cast<std::size_t>(spec.qubits) - 1);
    const double step = 2.0 * std::numbers::pi / spec.p;
    for (std::size_t i = 0; i < c.values.size(); ++i) {
        const double x = static_cast<double>(i + 1);  // bonds are 1-indexed
        c.values[i] = spec.g0 + spec.g1 * std::cos(step * x + theta);
    }
    return c;
}

Couplings apply_disorder(const Couplings& c, const DisorderRealization& d) {
    if (c.values.size() != d.offsets.size())
        throw std::invalid_argument("apply_disorder: coupling/offset length mismatch");
    Couplings out = c;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += d.offsets[i];
    return out;
}

namespace {

// Uniform double in [0, 1) from the top 53 bits of an mt19937_64 draw.
// uniform_real_distribution is implementation-defined; this is not.
double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

DisorderRealization sample_disorder(double w, std::size_t count, std::uint64_t seed) {
    if (w < 0.0) throw std::invalid_argument("sample_disorder: w must be >= 0");
    DisorderRealization d;
    d.w = w;
    d.seed = seed;
    d.offsets.resize(count);
    std::mt19937_64 gen(seed);
    for (auto& o : d.offsets) o = w * (uniform01(gen) - 0.5);
    return d;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_sample_seed(std::uint64_t master, std::uint64_t w_index,
                                 std::uint64_t sample_index) {
    return splitmix64(splitmix64(master ^ splitmix64(w_index)) ^ sample_index);
}

}  // namespace sshqst
