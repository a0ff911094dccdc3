// Test-only oracles, independent of the library's eigensolver path.
#ifndef SSHQST_TESTS_ORACLES_HPP
#define SSHQST_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracles {

// Sturm count: number of eigenvalues of the symmetric tridiagonal matrix
// (d, e) strictly below x, via the sign changes of the characteristic
// three-term recurrence evaluated in quotient form.
inline int count_below(const std::vector<double>& d, const std::vector<double>& e,
                       double x) {
    const int n = static_cast<int>(d.size());
    int count = 0;
    double q = 1.0;
    const double tiny = 1e-300;
    for (int i = 0; i < n; ++i) {
        const double e2 = (i == 0) ? 0.0 : e[i - 1] * e[i - 1];
        q = d[i] - x - e2 / q;
        if (q == 0.0) q = tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

// All eigenvalues by bisection on the Sturm count, sorted ascending.
inline std::vector<double> tridiag_eigenvalues(const std::vector<double>& d,
                                               const std::vector<double>& e,
                                               double tol = 1e-12) {
    const int n = static_cast<int>(d.size());
    double lo = d[0], hi = d[0];
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) +
                         (i < n - 1 ? std::abs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    lo -= 1.0;
    hi += 1.0;
    std::vector<double> ev(n);
    for (int k = 0; k < n; ++k) {
        double a = lo, b = hi;
        while (b - a > tol) {
            const double mid = 0.5 * (a + b);
            if (count_below(d, e, mid) <= k) a = mid;
            else b = mid;
        }
        ev[k] = 0.5 * (a + b);
    }
    return ev;
}

// Open uniform chain with hopping j: eigenvalues 2 j cos(k pi / (M+1)).
inline std::vector<double> uniform_chain_eigenvalues(int m, double j) {
    std::vector<double> ev(m);
    const double pi = std::acos(-1.0);
    for (int k = 1; k <= m; ++k) ev[k - 1] = 2.0 * j * std::cos(k * pi / (m + 1));
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace oracles

#endif
