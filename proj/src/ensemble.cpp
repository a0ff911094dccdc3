#include "sshqst/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace sshqst {

namespace {

struct SampleOutcome {
    double fidelity = 0.0;
    double norm_drift = 0.0;
};

SampleOutcome run_sample(const EnsembleSpec& es, double w, std::uint64_t seed,
                         double gap) {
    const DisorderRealization d =
        sample_disorder(w, static_cast<std::size_t>(es.chain.qubits) - 1, seed);
    TransferReport r;
    switch (es.protocol) {
        case Protocol::p2:
            r = transfer_p2(es.chain, es.omega, &d, es.evolution, gap);
            break;
        case Protocol::p3_plus:
            r = transfer_p3(es.chain, es.omega, EdgeBranch::plus, &d, es.evolution, gap);
            break;
        case Protocol::p3_minus:
            r = transfer_p3(es.chain, es.omega, EdgeBranch::minus, &d, es.evolution, gap);
            break;
    }
    return {r.fidelity, r.norm_drift_max};
}

}  // namespace

EnsembleResult run_ensemble(const EnsembleSpec& es) {
    if (es.samples < 1) throw std::invalid_argument("run_ensemble: samples must be >= 1");
    for (const double w : es.w_grid)
        if (w < 0.0) throw std::invalid_argument("run_ensemble: W values must be >= 0");
    if (es.w_grid.empty()) throw std::invalid_argument("run_ensemble: empty W grid");

    const auto [theta_lo, theta_hi] = protocol_theta_range(es.chain.p);
    const double gap = bulk_edge_gap(es.chain, theta_lo, theta_hi, 201);

    const std::size_t n_w = es.w_grid.size();
    const std::size_t n_jobs = n_w * static_cast<std::size_t>(es.samples);
    std::vector<SampleOutcome> outcomes(n_jobs);
    std::vector<std::string> failures(n_jobs);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t j = next.fetch_add(1);
            if (j >= n_jobs) return;
            const std::size_t wi = j / es.samples;
            const std::size_t si = j % es.samples;
            const std::uint64_t seed = derive_sample_seed(es.master_seed, wi, si);
            try {
                outcomes[j] = run_sample(es, es.w_grid[wi], seed, gap);
            } catch (const std::exception& ex) {
                failures[j] = "sample seed " + std::to_string(seed) + " (w=" +
                              std::to_string(es.w_grid[wi]) + "): " + ex.what();
            }
        }
    };

    const int n_threads = std::max(1, es.workers);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int k = 0; k < n_threads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const auto& f : failures)
        if (!f.empty()) throw std::runtime_error("run_ensemble: " + f);

    // ordered fold over (wIndex, sampleIndex): bitwise stable for any worker count
    EnsembleResult result;
    result.gap = gap;
    result.spec = es;
    result.per_point.resize(n_w);
    for (std::size_t wi = 0; wi < n_w; ++wi) {
        EnsemblePoint& pt = result.per_point[wi];
        pt.w = es.w_grid[wi];
        pt.sample_fidelities.resize(es.samples);
        double sum = 0.0;
        for (int si = 0; si < es.samples; ++si) {
            const SampleOutcome& o = outcomes[wi * es.samples + si];
            pt.sample_fidelities[si] = o.fidelity;
            sum += o.fidelity;
            pt.max_norm_drift = std::max(pt.max_norm_drift, o.norm_drift);
        }
        pt.mean_fidelity = sum / es.samples;
        double ss = 0.0;
        for (int si = 0; si < es.samples; ++si) {
            const double dev = pt.sample_fidelities[si] - pt.mean_fidelity;
            ss += dev * dev;
        }
        pt.std_dev = (es.samples > 1) ? std::sqrt(ss / (es.samples - 1)) : 0.0;
    }
    return result;
}

std::vector<CollapsePoint> collapse_axis(const EnsembleResult& result) {
    if (result.gap <= 0.0) throw std::invalid_argument("collapse_axis: gap must be positive");
    std::vector<CollapsePoint> out;
    for (const auto& pt : result.per_point) {
        if (pt.w <= 0.0) continue;  // W=0 has no log coordinate
        out.push_back({std::log10(pt.w / result.gap), pt.mean_fidelity});
    }
    return out;
}

std::vector<GapPoint> gap_scan(int p, const std::vector<int>& sizes, double theta_min,
                               double theta_max, int grid_points) {
    std::vector<GapPoint> out;
    out.reserve(sizes.size());
    for (const int m : sizes) {
        ChainSpec spec{p, m, p == 2 ? 1.0 : 0.0, 1.0};
        if (!spec.transfer_compatible())
            throw std::invalid_argument("gap_scan: qubit count " + std::to_string(m) +
                                        " incompatible with p=" + std::to_string(p));
        out.push_back({m, bulk_edge_gap(spec, theta_min, theta_max, grid_points)});
    }
    return out;
}

}  // namespace sshqst
