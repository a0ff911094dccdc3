#include "sshqst/edgestates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sshqst {

namespace {

constexpr double kPi = std::numbers::pi;

void require_p2_chain(const ChainSpec& spec) {
    spec.validate();
    if (spec.p != 2) throw std::invalid_argument("edge state: chain period must be 2");
    if (spec.qubits % 2 == 0)
        throw std::invalid_argument("edge state: p=2 chain must have odd qubit count");
}

void require_p3_chain(const ChainSpec& spec) {
    spec.validate();
    if (spec.p != 3) throw std::invalid_argument("edge state: chain period must be 3");
    if (spec.qubits % 3 != 2)
        throw std::invalid_argument("edge state: p=3 chain must have 3N-1 qubits");
    if (spec.g0 != 0.0)
        throw std::invalid_argument("edge state: p=3 closed form requires g0 = 0");
}

// Geometric cell amplitudes A_1..A_N with A_{x+1} = ratio_fw * A_x.
// Built from whichever end keeps the recurrence contracting, so the
// decoupled limits (ratio 0 or infinity) come out exact.
std::vector<double> cell_profile(int n_cells, double num, double den) {
    // ratio_fw = num/den; backward ratio = den/num
    std::vector<double> a(n_cells, 0.0);
    if (std::abs(num) <= std::abs(den)) {
        const double r = num / den;  // |r| <= 1
        a[0] = 1.0;
        for (int x = 1; x < n_cells; ++x) a[x] = a[x - 1] * r;
    } else {
        const double r = den / num;  // |r| < 1
        a[n_cells - 1] = 1.0;
        for (int x = n_cells - 2; x >= 0; --x) a[x] = a[x + 1] * r;
    }
    return a;
}

}  // namespace

double lambda_p2(double g0, double g1, double theta) {
    const double j1 = g0 - g1 * std::cos(theta);
    const double j2 = g0 + g1 * std::cos(theta);
    if (j2 == 0.0)
        throw std::domain_error("lambda_p2: J2 = 0, right-decoupled limit (|lambda| infinite)");
    return -j1 / j2;
}

double lambda_p3(double g1, double theta, EdgeBranch branch) {
    if (branch == EdgeBranch::zero)
        throw std::invalid_argument("lambda_p3: branch must be plus or minus");
    const double j2 = g1 * std::cos(4.0 * kPi / 3.0 + theta);
    const double j3 = g1 * std::cos(theta);
    if (j3 == 0.0)
        throw std::domain_error("lambda_p3: J3 = 0, right-decoupled limit (|lambda| infinite)");
    const double sign = (branch == EdgeBranch::plus) ? 1.0 : -1.0;
    return -sign * j2 / j3;
}

WaveVector analytic_edge_p2(const ChainSpec& spec, double theta) {
    require_p2_chain(spec);
    const int n_cells = (spec.qubits + 1) / 2;
    const double j1 = spec.g0 - spec.g1 * std::cos(theta);
    const double j2 = spec.g0 + spec.g1 * std::cos(theta);
    // b-site rows of H psi = 0 give A_{x+1} = (-J1/J2) A_x
    const std::vector<double> a = cell_profile(n_cells, -j1, j2);

    WaveVector v;
    v.amplitudes.assign(spec.qubits, 0.0);
    for (int x = 0; x < n_cells; ++x) v.amplitudes[2 * x] = a[x];
    v.normalize();
    return v;
}

std::pair<WaveVector, double> analytic_edge_p3(const ChainSpec& spec, double theta,
                                               EdgeBranch branch) {
    require_p3_chain(spec);
    if (branch == EdgeBranch::zero)
        throw std::invalid_argument("analytic_edge_p3: branch must be plus or minus");
    const int n_cells = (spec.qubits + 1) / 3;
    const double sign = (branch == EdgeBranch::plus) ? 1.0 : -1.0;
    const double j1 = spec.g1 * std::cos(2.0 * kPi / 3.0 + theta);
    const double j2 = spec.g1 * std::cos(4.0 * kPi / 3.0 + theta);
    const double j3 = spec.g1 * std::cos(theta);
    // c-site rows of H psi = E psi give A_{x+1} = (-sign * J2/J3) A_x
    const std::vector<double> a = cell_profile(n_cells, -sign * j2, j3);

    WaveVector v;
    v.amplitudes.assign(spec.qubits, 0.0);
    for (int x = 0; x < n_cells; ++x) {
        v.amplitudes[3 * x] = a[x];
        v.amplitudes[3 * x + 1] = sign * a[x];
    }
    v.normalize();
    return {v, sign * j1};
}

WaveVector landmark(const ChainSpec& spec, Landmark name) {
    spec.validate();
    const bool p2_name = (name == Landmark::L || name == Landmark::R || name == Landmark::W);
    if (p2_name) require_p2_chain(spec);
    else require_p3_chain(spec);

    const int m = spec.qubits;
    WaveVector v;
    v.amplitudes.assign(m, 0.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (name) {
        case Landmark::L:
            v.amplitudes[0] = 1.0;
            break;
        case Landmark::R:
            v.amplitudes[m - 1] = 1.0;
            break;
        case Landmark::W: {
            const int n_cells = (m + 1) / 2;
            const double amp = 1.0 / std::sqrt(static_cast<double>(n_cells));
            for (int x = 0; x < n_cells; ++x)
                v.amplitudes[2 * x] = (x % 2 == 0 ? amp : -amp);
            break;
        }
        case Landmark::Lplus:
        case Landmark::Lminus: {
            const double s = (name == Landmark::Lplus) ? 1.0 : -1.0;
            v.amplitudes[0] = inv_sqrt2;
            v.amplitudes[1] = s * inv_sqrt2;
            break;
        }
        case Landmark::Rplus:
        case Landmark::Rminus: {
            const double s = (name == Landmark::Rplus) ? 1.0 : -1.0;
            v.amplitudes[m - 2] = inv_sqrt2;
            v.amplitudes[m - 1] = s * inv_sqrt2;
            break;
        }
        case Landmark::Wplus:
        case Landmark::Wminus: {
            // analytic form at theta = pi/3: lambda = -1 (plus), +1 (minus)
            const double s = (name == Landmark::Wplus) ? 1.0 : -1.0;
            const int n_cells = (m + 1) / 3;
            const double amp = 1.0 / std::sqrt(2.0 * n_cells);
            for (int x = 0; x < n_cells; ++x) {
                const double cell = (s > 0.0 && x % 2 == 1) ? -amp : amp;
                v.amplitudes[3 * x] = cell;
                v.amplitudes[3 * x + 1] = s * cell;
            }
            break;
        }
    }
    return v;
}

EdgeSide edge_side(double lambda) {
    const double mag = std::abs(lambda);
    if (std::abs(mag - 1.0) <= 1e-12) return EdgeSide::delocalized;
    return mag < 1.0 ? EdgeSide::left : EdgeSide::right;
}

}  // namespace sshqst
