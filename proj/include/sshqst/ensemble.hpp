#ifndef SSHQST_ENSEMBLE_HPP
#define SSHQST_ENSEMBLE_HPP

#include "sshqst/protocols.hpp"

namespace sshqst {

enum class Protocol { p2, p3_plus, p3_minus };

struct EnsembleSpec {
    Protocol protocol = Protocol::p2;
    ChainSpec chain;
    double omega = 0.01;
    std::vector<double> w_grid;
    int samples = 100;
    std::uint64_t master_seed = 1;
    EvolutionConfig evolution;
    int workers = 1;  // sample-level thread pool size
};

struct EnsemblePoint {
    double w = 0.0;
    double mean_fidelity = 0.0;
    double std_dev = 0.0;
    double max_norm_drift = 0.0;
    std::vector<double> sample_fidelities;
};

struct EnsembleResult {
    std::vector<EnsemblePoint> per_point;
    double gap = 0.0;  // clean-chain bulk-edge gap over the protocol sweep
    EnsembleSpec spec; // config echo; per-sample seeds re-derivable from master_seed
};

// For each W, runs `samples` disorder realizations of the protocol with
// per-sample seeds derive_sample_seed(master_seed, wIndex, sampleIndex)
// and aggregates mean and sample standard deviation. The per-sample jobs
// may run on `workers` threads; the reduction is an ordered fold over
// (wIndex, sampleIndex), so results are bit-identical for any worker count.
EnsembleResult run_ensemble(const EnsembleSpec& spec);

// lg(W/gap) transform of an ensemble curve; W = 0 points are skipped.
struct CollapsePoint {
    double lg_w_over_gap;
    double mean_fidelity;
};
std::vector<CollapsePoint> collapse_axis(const EnsembleResult& result);

// Clean-chain gap per chain size, over the protocol theta range.
struct GapPoint {
    int qubits;
    double gap;
};
std::vector<GapPoint> gap_scan(int p, const std::vector<int>& sizes,
                               double theta_min, double theta_max,
                               int grid_points = 201);

}  // namespace sshqst

#endif
