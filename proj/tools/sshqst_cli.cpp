// Command-line front end: every headline result (spectra, transfers,
// disorder ensembles, gap scans, collapse curves) as a reproducible run
// emitting CSV data plus JSON provenance.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "sshqst/ensemble.hpp"

using json = nlohmann::ordered_json;
using namespace sshqst;

namespace {

constexpr double kPi = std::numbers::pi;

// Full round-trip precision so downstream consumers lose nothing.
std::string g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

json physical_block(double g1_mhz) {
    // g1/2pi = g1_mhz MHz, so one time unit 1/g1 = 1/(2pi * g1_mhz * 1e6) s
    json j;
    j["g1_over_2pi_mhz"] = g1_mhz;
    j["time_unit_seconds"] = 1.0 / (2.0 * kPi * g1_mhz * 1e6);
    return j;
}

struct CommonOpts {
    std::string out;
    bool physical = false;
    double g1_mhz = 250.0;
};

json provenance(const std::string& command, const json& flags) {
    json j;
    j["command"] = command;
    j["flags"] = flags;
    return j;
}

void write_sidecar(const std::string& csv_path, const json& j) {
    write_file(csv_path + ".provenance.json", j.dump(2) + "\n");
}

Protocol parse_protocol(int p, const std::string& branch) {
    if (p == 2) return Protocol::p2;
    if (branch == "minus") return Protocol::p3_minus;
    return Protocol::p3_plus;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
    int p = 2;
    int qubits = 9;
    double g0 = 1.0, g1 = 1.0;
    double theta_min = 0.0, theta_max = kPi;
    int theta_steps = 200;
    double disorder_w = 0.0;
    std::uint64_t seed = 1;
    CommonOpts common;
};

int run_spectrum(const SpectrumArgs& a) {
    const ChainSpec spec{a.p, a.qubits, a.g0, a.g1};
    std::optional<DisorderRealization> disorder;
    if (a.disorder_w > 0.0)
        disorder = sample_disorder(a.disorder_w, static_cast<std::size_t>(a.qubits) - 1, a.seed);

    const auto grid = linspace(a.theta_min, a.theta_max, a.theta_steps);
    const auto sweep = spectrum_sweep(spec, grid, disorder ? &*disorder : nullptr);

    std::ostringstream csv;
    csv << "theta";
    for (int k = 1; k <= a.qubits; ++k) csv << ",e_" << k;
    csv << "\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        csv << g17(grid[i]);
        for (const double e : sweep[i].eigenvalues) csv << "," << g17(e);
        csv << "\n";
    }
    write_file(a.common.out, csv.str());

    json flags = {{"p", a.p},           {"qubits", a.qubits},
                  {"g0", a.g0},         {"g1", a.g1},
                  {"theta-min", a.theta_min}, {"theta-max", a.theta_max},
                  {"theta-steps", a.theta_steps}, {"disorder-w", a.disorder_w},
                  {"seed", a.seed},     {"out", a.common.out}};
    json prov = provenance("spectrum", flags);
    if (a.common.physical) prov["physical"] = physical_block(a.common.g1_mhz);
    write_sidecar(a.common.out, prov);
    return 0;
}

// ---------------------------------------------------------------- transfer

struct TransferArgs {
    int p = 2;
    int qubits = 9;
    double omega = 0.04;
    std::string branch = "plus";
    double disorder_w = 0.0;
    std::uint64_t seed = 1;
    double dt = 0.01;
    int record_every = 0;
    std::string trajectory_out;
    bool convergence = true;
    CommonOpts common;
};

TransferReport do_transfer(int p, const ChainSpec& spec, double omega,
                           const std::string& branch, const DisorderRealization* d,
                           const EvolutionConfig& cfg) {
    if (p == 2) return transfer_p2(spec, omega, d, cfg);
    return transfer_p3(spec, omega, branch == "minus" ? EdgeBranch::minus : EdgeBranch::plus,
                       d, cfg);
}

int run_transfer(const TransferArgs& a) {
    const ChainSpec spec{a.p, a.qubits, a.p == 2 ? 1.0 : 0.0, 1.0};
    std::optional<DisorderRealization> disorder;
    if (a.disorder_w > 0.0)
        disorder = sample_disorder(a.disorder_w, static_cast<std::size_t>(a.qubits) - 1, a.seed);
    const DisorderRealization* d = disorder ? &*disorder : nullptr;

    EvolutionConfig cfg;
    cfg.dt = a.dt;
    cfg.record_every = (!a.trajectory_out.empty() && a.record_every == 0) ? 100
                                                                          : a.record_every;
    const TransferReport report = do_transfer(a.p, spec, a.omega, a.branch, d, cfg);

    if (report.adiabatic_margin >= 1.0)
        std::cerr << "warning: adiabatic margin sqrt(g1*omega)/gap = "
                  << report.adiabatic_margin << " >= 1; the ramp is too fast\n";

    json j;
    j["fidelity"] = report.fidelity;
    j["t_final"] = report.t_final;
    j["omega"] = report.omega;
    j["adiabatic_margin"] = report.adiabatic_margin;
    j["gap"] = report.gap;
    j["norm_drift_max"] = report.norm_drift_max;
    if (report.disorder_seed) j["disorder_seed"] = *report.disorder_seed;

    if (a.convergence) {
        EvolutionConfig half = cfg;
        half.dt = 0.5 * a.dt;
        half.record_every = 0;
        const TransferReport fine = do_transfer(a.p, spec, a.omega, a.branch, d, half);
        j["convergence"] = {{"dt", a.dt},
                            {"halved_dt", half.dt},
                            {"fidelity_delta", std::abs(report.fidelity - fine.fidelity)}};
    }

    json flags = {{"p", a.p},     {"qubits", a.qubits},       {"omega", a.omega},
                  {"branch", a.branch}, {"disorder-w", a.disorder_w}, {"seed", a.seed},
                  {"dt", a.dt},   {"record-every", a.record_every},
                  {"out", a.common.out}};
    j["provenance"] = provenance("transfer", flags);
    if (a.common.physical) {
        j["physical"] = physical_block(a.common.g1_mhz);
        j["physical"]["t_final_seconds"] =
            report.t_final / (2.0 * kPi * a.common.g1_mhz * 1e6);
    }
    write_file(a.common.out, j.dump(2) + "\n");

    if (!a.trajectory_out.empty() && report.trajectory) {
        const auto [theta_lo, theta_hi] = protocol_theta_range(a.p);
        const RampSchedule sched{theta_lo, a.omega, report.t_final};
        const WaveVector target =
            (a.p == 2) ? landmark(spec, Landmark::R)
                       : landmark(spec, a.branch == "minus" ? Landmark::Rminus
                                                            : Landmark::Rplus);
        std::ostringstream csv;
        csv << "t,theta,norm,fidelity_to_target,edge_energy_expectation\n";
        const Trajectory& traj = *report.trajectory;
        for (std::size_t k = 0; k < traj.times.size(); ++k) {
            const double t = traj.times[k];
            const WaveVector& psi = traj.states[k];
            const TridiagonalHamiltonian h = hamiltonian_at(spec, sched, d, t);
            std::vector<std::complex<double>> hv(psi.size());
            h.apply(psi.amplitudes.data(), hv.data());
            std::complex<double> energy = 0.0;
            for (std::size_t i = 0; i < psi.size(); ++i)
                energy += std::conj(psi.amplitudes[i]) * hv[i];
            csv << g17(t) << "," << g17(sched.theta_at(t)) << "," << g17(psi.norm()) << ","
                << g17(std::abs(inner(target, psi))) << "," << g17(energy.real()) << "\n";
        }
        write_file(a.trajectory_out, csv.str());
    }
    return 0;
}

// ---------------------------------------------------------------- ensemble

struct EnsembleArgs {
    int p = 2;
    int qubits = 9;
    double omega = 0.04;
    double w_min = 0.0, w_max = 1.0;
    int w_steps = 21;
    int samples = 100;
    std::uint64_t master_seed = 1;
    std::string branch = "plus";
    int workers = 1;
    double dt = 0.01;
    CommonOpts common;
};

EnsembleResult compute_ensemble(const EnsembleArgs& a) {
    EnsembleSpec es;
    es.protocol = parse_protocol(a.p, a.branch);
    es.chain = ChainSpec{a.p, a.qubits, a.p == 2 ? 1.0 : 0.0, 1.0};
    es.omega = a.omega;
    es.w_grid = linspace(a.w_min, a.w_max, a.w_steps);
    es.samples = a.samples;
    es.master_seed = a.master_seed;
    es.evolution.dt = a.dt;
    es.workers = a.workers;
    return run_ensemble(es);
}

json ensemble_flags(const EnsembleArgs& a) {
    return {{"p", a.p},           {"qubits", a.qubits},   {"omega", a.omega},
            {"w-min", a.w_min},   {"w-max", a.w_max},     {"w-steps", a.w_steps},
            {"samples", a.samples}, {"master-seed", a.master_seed},
            {"branch", a.branch}, {"dt", a.dt},           {"out", a.common.out}};
}

int run_ensemble_cmd(const EnsembleArgs& a) {
    const EnsembleResult r = compute_ensemble(a);

    std::ostringstream csv;
    csv << "w,mean_fidelity,std_dev\n";
    for (const auto& pt : r.per_point)
        csv << g17(pt.w) << "," << g17(pt.mean_fidelity) << "," << g17(pt.std_dev) << "\n";
    write_file(a.common.out, csv.str());

    json prov = provenance("ensemble", ensemble_flags(a));
    prov["gap"] = r.gap;
    json drift = json::array();
    for (const auto& pt : r.per_point) drift.push_back(pt.max_norm_drift);
    prov["max_norm_drift_per_point"] = drift;
    if (a.common.physical) prov["physical"] = physical_block(a.common.g1_mhz);
    write_sidecar(a.common.out, prov);
    return 0;
}

// ---------------------------------------------------------------- gap scan

struct GapScanArgs {
    int p = 2;
    std::vector<int> qubits_list;
    int theta_steps = 201;
    CommonOpts common;
};

int run_gap_scan(const GapScanArgs& a) {
    const auto [theta_lo, theta_hi] = protocol_theta_range(a.p);
    std::ostringstream csv;
    csv << "qubits,gap\n";
    for (const int m : a.qubits_list) {
        try {
            const auto pts = gap_scan(a.p, {m}, theta_lo, theta_hi, a.theta_steps);
            csv << m << "," << g17(pts[0].gap) << "\n";
        } catch (const std::exception& ex) {
            csv << m << ",nan\n";
            std::cerr << "gap-scan: " << ex.what() << "\n";
        }
    }
    write_file(a.common.out, csv.str());

    json flags = {{"p", a.p},
                  {"qubits-list", a.qubits_list},
                  {"theta-steps", a.theta_steps},
                  {"out", a.common.out}};
    write_sidecar(a.common.out, provenance("gap-scan", flags));
    return 0;
}

// ---------------------------------------------------------------- collapse

int run_collapse(const EnsembleArgs& a) {
    const EnsembleResult r = compute_ensemble(a);
    const auto pts = collapse_axis(r);
    if (pts.size() != r.per_point.size())
        std::cerr << "collapse: skipped " << r.per_point.size() - pts.size()
                  << " W=0 row(s) (no log coordinate)\n";

    std::ostringstream csv;
    csv << "lg_w_over_gap,mean_fidelity\n";
    for (const auto& pt : pts)
        csv << g17(pt.lg_w_over_gap) << "," << g17(pt.mean_fidelity) << "\n";
    write_file(a.common.out, csv.str());

    json prov = provenance("collapse", ensemble_flags(a));
    prov["gap"] = r.gap;
    if (a.common.physical) prov["physical"] = physical_block(a.common.g1_mhz);
    write_sidecar(a.common.out, prov);
    return 0;
}

// ---------------------------------------------------------------- reproduce

struct ReproduceArgs {
    std::string out_dir;
    int samples = 100;
    int w_steps = 21;
    int workers = 1;
    double dt = 0.01;
};

int run_reproduce(const ReproduceArgs& a) {
    std::string dir = a.out_dir;
    if (dir.empty()) {
        const auto now = std::chrono::system_clock::now().time_since_epoch();
        dir = "reproduce-" +
              std::to_string(std::chrono::duration_cast<std::chrono::seconds>(now).count());
    }
    std::filesystem::create_directories(dir);
    auto path = [&](const std::string& name) { return dir + "/" + name; };

    std::cerr << "[spectra-p2] clean p=2 spectra\n";
    SpectrumArgs s2;
    s2.common.out = path("spectrum_p2_w0.csv");
    run_spectrum(s2);

    std::cerr << "[spectra-p2-disorder] disordered p=2 spectra\n";
    for (const double w : {0.6, 0.8}) {
        SpectrumArgs s = s2;
        s.disorder_w = w;
        s.seed = 1;
        s.common.out = path(w == 0.6 ? "spectrum_p2_w0.6.csv"
                                     : "spectrum_p2_w0.8.csv");
        run_spectrum(s);
    }

    std::cerr << "[spectra-p3] p=3 spectra\n";
    SpectrumArgs s3;
    s3.p = 3;
    s3.qubits = 8;
    s3.g0 = 0.0;
    s3.theta_min = 0.0;
    s3.theta_max = 2.0 * kPi;
    s3.common.out = path("spectrum_p3.csv");
    run_spectrum(s3);

    std::cerr << "[plateau-p2] p=2 fidelity vs W (3 chain sizes, "
              << a.samples << " samples)\n";
    const int p2_sizes[] = {9, 15, 21};
    const double p2_omegas[] = {0.04, 0.02, 0.01};
    for (int i = 0; i < 3; ++i) {
        EnsembleArgs e;
        e.qubits = p2_sizes[i];
        e.omega = p2_omegas[i];
        e.w_max = 1.0;
        e.w_steps = a.w_steps;
        e.samples = a.samples;
        e.workers = a.workers;
        e.dt = a.dt;
        e.common.out = path("ensemble_p2_m" + std::to_string(e.qubits) + ".csv");
        run_ensemble_cmd(e);
    }

    std::cerr << "[plateau-p3] p=3 fidelity vs W (3 chain sizes)\n";
    const int p3_sizes[] = {8, 14, 20};
    const double p3_omegas[] = {0.01, 0.004, 0.001};
    for (int i = 0; i < 3; ++i) {
        EnsembleArgs e;
        e.p = 3;
        e.qubits = p3_sizes[i];
        e.omega = p3_omegas[i];
        e.w_max = 0.5;
        e.w_steps = a.w_steps;
        e.samples = a.samples;
        e.workers = a.workers;
        e.dt = a.dt;
        e.common.out = path("ensemble_p3_m" + std::to_string(e.qubits) + ".csv");
        run_ensemble_cmd(e);
    }

    std::cerr << "[gap-scan] gap scans\n";
    GapScanArgs g2;
    g2.qubits_list = {9, 15, 21, 31, 51};
    g2.common.out = path("gap_p2.csv");
    run_gap_scan(g2);
    GapScanArgs g3;
    g3.p = 3;
    g3.qubits_list = {8, 14, 20, 32, 50};
    g3.common.out = path("gap_p3.csv");
    run_gap_scan(g3);

    std::cerr << "[collapse] collapse curves\n";
    for (int i = 0; i < 3; ++i) {
        EnsembleArgs e;
        e.qubits = p2_sizes[i];
        e.omega = p2_omegas[i];
        e.w_min = 0.01;
        e.w_max = 1.0;
        e.w_steps = a.w_steps;
        e.samples = a.samples;
        e.workers = a.workers;
        e.dt = a.dt;
        e.common.out = path("collapse_p2_m" + std::to_string(e.qubits) + ".csv");
        run_collapse(e);
    }
    for (int i = 0; i < 3; ++i) {
        EnsembleArgs e;
        e.p = 3;
        e.qubits = p3_sizes[i];
        e.omega = p3_omegas[i];
        e.w_min = 0.005;
        e.w_max = 0.5;
        e.w_steps = a.w_steps;
        e.samples = a.samples;
        e.workers = a.workers;
        e.dt = a.dt;
        e.common.out = path("collapse_p3_m" + std::to_string(e.qubits) + ".csv");
        run_collapse(e);
    }
    std::cerr << "done: " << dir << "\n";
    return 0;
}

void add_common(CLI::App* cmd, CommonOpts& c, bool with_out = true) {
    if (with_out)
        cmd->add_option("--out", c.out, "output file path")->required();
    cmd->add_flag("--physical", c.physical,
                  "annotate outputs with physical units (conversion only)");
    cmd->add_option("--g1-mhz", c.g1_mhz, "g1/2pi in MHz for --physical")
        ->default_val(250.0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "SSH qubit-chain simulator: topological edge states and adiabatic state "
        "transfer.\nEnergies are in units of g1, times in 1/g1 (hbar = 1)."};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file; flags override it");

    SpectrumArgs sa;
    CLI::App* spectrum = app.add_subcommand("spectrum", "energy spectra vs theta (CSV)");
    spectrum->add_option("--p", sa.p, "unit-cell period")->default_val(2);
    spectrum->add_option("--qubits", sa.qubits, "chain length M")->default_val(9);
    spectrum->add_option("--g0", sa.g0)->default_val(1.0);
    spectrum->add_option("--g1", sa.g1)->default_val(1.0);
    spectrum->add_option("--theta-min", sa.theta_min)->default_val(0.0);
    spectrum->add_option("--theta-max", sa.theta_max)->default_val(kPi);
    spectrum->add_option("--theta-steps", sa.theta_steps)->default_val(200);
    spectrum->add_option("--disorder-w", sa.disorder_w, "imperfection strength W")
        ->default_val(0.0);
    spectrum->add_option("--seed", sa.seed)->default_val(1);
    add_common(spectrum, sa.common);

    TransferArgs ta;
    CLI::App* transfer =
        app.add_subcommand("transfer", "single adiabatic transfer run (JSON report)");
    transfer->add_option("--p", ta.p)->default_val(2);
    transfer->add_option("--qubits", ta.qubits)->default_val(9);
    transfer->add_option("--omega", ta.omega, "ramp rate in g1")->default_val(0.04);
    transfer->add_option("--branch", ta.branch, "p=3 Bell branch: plus|minus")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->default_val("plus");
    transfer->add_option("--disorder-w", ta.disorder_w)->default_val(0.0);
    transfer->add_option("--seed", ta.seed)->default_val(1);
    transfer->add_option("--dt", ta.dt, "RK4 step in 1/g1")->default_val(0.01);
    transfer->add_option("--record-every", ta.record_every,
                         "trajectory snapshot stride in steps")
        ->default_val(0);
    transfer->add_option("--trajectory", ta.trajectory_out, "trajectory CSV path");
    transfer->add_flag("!--no-convergence-check", ta.convergence,
                       "skip the dt/2 verification run");
    add_common(transfer, ta.common);

    EnsembleArgs ea;
    CLI::App* ensemble =
        app.add_subcommand("ensemble", "disorder-averaged fidelity vs W (CSV + sidecar)");
    ensemble->add_option("--p", ea.p)->default_val(2);
    ensemble->add_option("--qubits", ea.qubits)->default_val(9);
    ensemble->add_option("--omega", ea.omega)->default_val(0.04);
    ensemble->add_option("--w-min", ea.w_min)->default_val(0.0);
    ensemble->add_option("--w-max", ea.w_max)->default_val(1.0);
    ensemble->add_option("--w-steps", ea.w_steps)->default_val(21);
    ensemble->add_option("--samples", ea.samples, "disorder realizations per W")
        ->default_val(100);
    ensemble->add_option("--master-seed", ea.master_seed)->default_val(1);
    ensemble->add_option("--branch", ea.branch)
        ->check(CLI::IsMember({"plus", "minus"}))
        ->default_val("plus");
    ensemble->add_option("--workers", ea.workers, "thread pool size")->default_val(1);
    ensemble->add_option("--dt", ea.dt)->default_val(0.01);
    add_common(ensemble, ea.common);

    GapScanArgs ga;
    CLI::App* gapscan =
        app.add_subcommand("gap-scan", "bulk-edge gap vs chain length (CSV)");
    gapscan->add_option("--p", ga.p)->default_val(2);
    gapscan->add_option("--qubits-list", ga.qubits_list, "chain lengths")
        ->required()
        ->delimiter(',');
    gapscan->add_option("--theta-steps", ga.theta_steps)->default_val(201);
    add_common(gapscan, ga.common);

    EnsembleArgs ca;
    CLI::App* collapse =
        app.add_subcommand("collapse", "fidelity vs lg(W/gap) (CSV + sidecar)");
    collapse->add_option("--p", ca.p)->default_val(2);
    collapse->add_option("--qubits", ca.qubits)->default_val(9);
    collapse->add_option("--omega", ca.omega)->default_val(0.04);
    collapse->add_option("--w-min", ca.w_min)->default_val(0.01);
    collapse->add_option("--w-max", ca.w_max)->default_val(1.0);
    collapse->add_option("--w-steps", ca.w_steps)->default_val(21);
    collapse->add_option("--samples", ca.samples)->default_val(100);
    collapse->add_option("--master-seed", ca.master_seed)->default_val(1);
    collapse->add_option("--branch", ca.branch)
        ->check(CLI::IsMember({"plus", "minus"}))
        ->default_val("plus");
    collapse->add_option("--workers", ca.workers)->default_val(1);
    collapse->add_option("--dt", ca.dt)->default_val(0.01);
    add_common(collapse, ca.common);

    ReproduceArgs ra;
    CLI::App* reproduce =
        app.add_subcommand("reproduce", "run the full result suite at the reference design points");
    reproduce->add_option("--out-dir", ra.out_dir,
                          "output directory (default: timestamped)");
    reproduce->add_option("--samples", ra.samples)->default_val(100);
    reproduce->add_option("--w-steps", ra.w_steps)->default_val(21);
    reproduce->add_option("--workers", ra.workers)->default_val(1);
    reproduce->add_option("--dt", ra.dt)->default_val(0.01);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(sa);
        if (transfer->parsed()) return run_transfer(ta);
        if (ensemble->parsed()) return run_ensemble_cmd(ea);
        if (gapscan->parsed()) return run_gap_scan(ga);
        if (collapse->parsed()) return run_collapse(ca);
        if (reproduce->parsed()) return run_reproduce(ra);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
