#include "sshqst/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sshqst {

void TridiagonalHamiltonian::apply(const std::complex<double>* x,
                                   std::complex<double>* y) const {
    const int n = dim();
    for (int i = 0; i < n; ++i) {
        std::complex<double> s = diagonal[i] * x[i];
        if (i > 0) s += offdiagonal[i - 1] * x[i - 1];
        if (i + 1 < n) s += offdiagonal[i] * x[i + 1];
        y[i] = s;
    }
}

TridiagonalHamiltonian build_single_excitation(const Couplings& c) {
    TridiagonalHamiltonian h;
    h.diagonal.assign(c.values.size() + 1, 0.0);
    h.offdiagonal = c.values;
    return h;
}

namespace {

double hypot2(double a, double b) { return std::hypot(a, b); }

// Implicit-shift QL for a symmetric tridiagonal matrix (d: diagonal,
// e: subdiagonal, e[n-1] scratch). When z is non-null rotations are
// accumulated into the n x n row-major matrix z, whose columns become
// the eigenvectors.
void tqli(std::vector<double>& d, std::vector<double>& e, double* z, int n) {
    if (n == 0) return;
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (++iter > 50)
                    throw std::runtime_error(
                        "eigenvalues: QL iteration failed to converge after 50 sweeps");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {  // negligible rotation: deflate
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (int k = 0; k < n; ++k) {
                            f = z[k * n + i + 1];
                            z[k * n + i + 1] = s * z[k * n + i] + c * f;
                            z[k * n + i] = c * z[k * n + i] - s * f;
                        }
                    }
                }
                if (r == 0.0 && m - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    e.pop_back();
}

}  // namespace

Spectrum eigenvalues(const TridiagonalHamiltonian& h, bool want_vectors) {
    const int n = h.dim();
    if (n < 1) throw std::invalid_argument("eigenvalues: empty matrix");

    std::vector<double> d = h.diagonal;
    std::vector<double> e = h.offdiagonal;
    std::vector<double> z;
    if (want_vectors) {
        z.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i) * n + i] = 1.0;
    }
    tqli(d, e, want_vectors ? z.data() : nullptr, n);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

    Spectrum s;
    s.eigenvalues.resize(n);
    for (int k = 0; k < n; ++k) s.eigenvalues[k] = d[order[k]];
    if (want_vectors) {
        s.eigenvectors.assign(n, std::vector<double>(n));
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                s.eigenvectors[k][i] = z[static_cast<std::size_t>(i) * n + order[k]];
    }
    return s;
}

WaveVector eigenvector_for(const TridiagonalHamiltonian& h, double target, double tol) {
    const Spectrum s = eigenvalues(h, true);
    int best = 0;
    double best_dist = std::abs(s.eigenvalues[0] - target);
    for (int k = 1; k < h.dim(); ++k) {
        const double dist = std::abs(s.eigenvalues[k] - target);
        if (dist < best_dist) {
            best = k;
            best_dist = dist;
        }
    }
    if (best_dist > tol)
        throw std::invalid_argument("eigenvector_for: no eigenvalue within tolerance of target");

    WaveVector v;
    v.amplitudes.assign(s.eigenvectors[best].begin(), s.eigenvectors[best].end());
    // deterministic representative: first component of significant magnitude positive
    const double thresh = 1e-8;
    for (const auto& a : v.amplitudes) {
        if (std::abs(a) > thresh) {
            if (a.real() < 0.0)
                for (auto& b : v.amplitudes) b = -b;
            break;
        }
    }
    v.normalize();
    return v;
}

std::vector<Spectrum> spectrum_sweep(const ChainSpec& spec,
                                     const std::vector<double>& theta_grid,
                                     const DisorderRealization* disorder) {
    if (theta_grid.empty()) throw std::invalid_argument("spectrum_sweep: empty grid");
    std::vector<Spectrum> out;
    out.reserve(theta_grid.size());
    for (const double theta : theta_grid) {
        Couplings c = coupling_profile(spec, theta);
        if (disorder) c = apply_disorder(c, *disorder);
        out.push_back(eigenvalues(build_single_excitation(c)));
    }
    return out;
}

std::vector<double> analytic_edge_energies(const ChainSpec& spec, double theta) {
    if (spec.p == 2) return {0.0};
    if (spec.p == 3) {
        const double j1 = spec.g0 + spec.g1 * std::cos(2.0 * std::acos(-1.0) / 3.0 + theta);
        return {j1, -j1};
    }
    throw std::invalid_argument("analytic_edge_energies: only p=2 and p=3 supported");
}

double bulk_edge_gap(const ChainSpec& spec, double theta_min, double theta_max,
                     int grid_points, const DisorderRealization* disorder) {
    if (grid_points < 2) throw std::invalid_argument("bulk_edge_gap: need >= 2 grid points");
    double gap = std::numeric_limits<double>::infinity();
    for (const double theta : linspace(theta_min, theta_max, grid_points)) {
        Couplings c = coupling_profile(spec, theta);
        if (disorder) c = apply_disorder(c, *disorder);
        const Spectrum s = eigenvalues(build_single_excitation(c));
        const std::vector<double> edges = analytic_edge_energies(spec, theta);

        // locate the spectrum entry nearest each analytic edge energy
        std::vector<int> edge_idx;
        for (const double e0 : edges) {
            int best = 0;
            for (int k = 1; k < spec.qubits; ++k)
                if (std::abs(s.eigenvalues[k] - e0) < std::abs(s.eigenvalues[best] - e0))
                    best = k;
            edge_idx.push_back(best);
        }
        for (std::size_t b = 0; b < edges.size(); ++b) {
            const double e_edge = s.eigenvalues[edge_idx[b]];
            for (int k = 0; k < spec.qubits; ++k) {
                if (std::find(edge_idx.begin(), edge_idx.end(), k) != edge_idx.end()) continue;
                gap = std::min(gap, std::abs(s.eigenvalues[k] - e_edge));
            }
        }
    }
    return gap;
}

double chiral_residual(const TridiagonalHamiltonian& h) {
    // Gamma H Gamma flips the sign of the off-diagonal and keeps the diagonal,
    // so (Gamma H Gamma + H)_max = 2 * max |diagonal|.
    double r = 0.0;
    for (const double d : h.diagonal) r = std::max(r, 2.0 * std::abs(d));
    return r;
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) throw std::invalid_argument("linspace: need n >= 1");
    std::vector<double> g(n);
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo + step * i;
    g[n - 1] = hi;
    return g;
}

}  // namespace sshqst
