#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sshqst/edgestates.hpp"
#include "sshqst/hamiltonian.hpp"

using namespace sshqst;

namespace {

constexpr double kPi = std::numbers::pi;

double residual(const ChainSpec& spec, double theta, const WaveVector& psi, double energy) {
    const TridiagonalHamiltonian h = build_single_excitation(coupling_profile(spec, theta));
    std::vector<std::complex<double>> hv(psi.size());
    h.apply(psi.amplitudes.data(), hv.data());
    double s = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i)
        s += std::norm(hv[i] - energy * psi.amplitudes[i]);
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("lambda_p2 closed form") {
    CHECK(std::abs(lambda_p2(1.0, 1.0, 0.0)) < 1e-15);
    CHECK(lambda_p2(1.0, 1.0, kPi / 2.0) == doctest::Approx(-1.0));
    CHECK(lambda_p2(1.0, 1.0, kPi / 3.0) == doctest::Approx(-1.0 / 3.0));
    CHECK_THROWS_AS(lambda_p2(1.0, -1.0, 0.0), std::domain_error);
}

TEST_CASE("edge_side classification") {
    CHECK(edge_side(0.0) == EdgeSide::left);
    CHECK(edge_side(-3.0) == EdgeSide::right);
    CHECK(edge_side(-1.0) == EdgeSide::delocalized);  // the W-state point
    CHECK(edge_side(0.99) == EdgeSide::left);
}

TEST_CASE("analytic_edge_p2 landmarks at theta = 0, pi/2, pi") {
    const ChainSpec spec{2, 9, 1.0, 1.0};

    const WaveVector left = analytic_edge_p2(spec, 0.0);
    CHECK(std::abs(left.amplitudes[0] - 1.0) < 1e-14);
    for (int i = 1; i < 9; ++i) CHECK(std::abs(left.amplitudes[i]) < 1e-14);

    const WaveVector w = analytic_edge_p2(spec, kPi / 2.0);
    const double amp = 1.0 / std::sqrt(5.0);
    for (int x = 0; x < 5; ++x) {
        const double expect = (x % 2 == 0 ? amp : -amp);
        CHECK(std::abs(w.amplitudes[2 * x] - expect) < 1e-12);
    }
    for (int x = 0; x < 4; ++x) CHECK(w.amplitudes[2 * x + 1] == std::complex<double>(0.0));

    const WaveVector right = analytic_edge_p2(spec, kPi);
    CHECK(std::abs(right.amplitudes[8] - 1.0) < 1e-14);
    for (int i = 0; i < 8; ++i) CHECK(std::abs(right.amplitudes[i]) < 1e-14);
}

TEST_CASE("analytic_edge_p2 rejects even chains") {
    CHECK_THROWS_AS(analytic_edge_p2(ChainSpec{2, 8, 1.0, 1.0}, 0.3), std::invalid_argument);
}

TEST_CASE("analytic_edge_p2 is an exact zero-energy eigenpair across theta") {
    for (const int m : {9, 21}) {
        const ChainSpec spec{2, m, 1.0, 1.0};
        for (const double theta : linspace(0.0, kPi, 100)) {
            const WaveVector psi = analytic_edge_p2(spec, theta);
            CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
            CHECK(residual(spec, theta, psi, 0.0) < 1e-10);
        }
    }
}

TEST_CASE("analytic_edge_p3: landmarks and exact eigenpairs") {
    const ChainSpec spec{3, 8, 0.0, 1.0};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    const auto [lp, ep] = analytic_edge_p3(spec, kPi / 6.0, EdgeBranch::plus);
    CHECK(ep == doctest::Approx(-std::sqrt(3.0) / 2.0));  // E+ = J1 = cos(5 pi/6)
    CHECK(std::abs(lp.amplitudes[0] - inv_sqrt2) < 1e-12);
    CHECK(std::abs(lp.amplitudes[1] - inv_sqrt2) < 1e-12);
    for (int i = 2; i < 8; ++i) CHECK(std::abs(lp.amplitudes[i]) < 1e-12);

    const auto [rp, er] = analytic_edge_p3(spec, kPi / 2.0, EdgeBranch::plus);
    CHECK(std::abs(rp.amplitudes[6] - inv_sqrt2) < 1e-12);
    CHECK(std::abs(rp.amplitudes[7] - inv_sqrt2) < 1e-12);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(rp.amplitudes[i]) < 1e-12);
    CHECK(er == doctest::Approx(std::cos(2.0 * kPi / 3.0 + kPi / 2.0)));

    // W-state point theta = pi/3: equal-magnitude cells, alternating sign
    const auto [wp, ew] = analytic_edge_p3(spec, kPi / 3.0, EdgeBranch::plus);
    const double amp = 1.0 / std::sqrt(6.0);
    for (int x = 0; x < 3; ++x) {
        CHECK(std::abs(std::abs(wp.amplitudes[3 * x]) - amp) < 1e-12);
        CHECK(std::abs(wp.amplitudes[3 * x] - wp.amplitudes[3 * x + 1]) < 1e-12);
    }
    CHECK(std::abs(wp.amplitudes[0] + wp.amplitudes[3]) < 1e-12);
}

TEST_CASE("analytic_edge_p3 eigenpairs across theta, both branches, M = 8 and 20") {
    for (const int m : {8, 20}) {
        const ChainSpec spec{3, m, 0.0, 1.0};
        for (const EdgeBranch branch : {EdgeBranch::plus, EdgeBranch::minus}) {
            for (const double theta : linspace(kPi / 6.0, kPi / 2.0, 100)) {
                const auto [psi, energy] = analytic_edge_p3(spec, theta, branch);
                CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
                CHECK(residual(spec, theta, psi, energy) < 1e-10);
                // c-sites stay empty
                for (int x = 2; x < m; x += 3)
                    CHECK(psi.amplitudes[x] == std::complex<double>(0.0));
            }
        }
    }
}

TEST_CASE("analytic_edge_p3 guards") {
    CHECK_THROWS_AS(analytic_edge_p3(ChainSpec{3, 9, 0.0, 1.0}, 0.3, EdgeBranch::plus),
                    std::invalid_argument);
    CHECK_THROWS_AS(analytic_edge_p3(ChainSpec{3, 8, 0.5, 1.0}, 0.3, EdgeBranch::plus),
                    std::invalid_argument);
    CHECK_THROWS_AS(lambda_p3(0.0, 0.3, EdgeBranch::plus), std::domain_error);
}

TEST_CASE("overlap with numerically computed eigenvectors") {
    const ChainSpec p2{2, 9, 1.0, 1.0};
    for (const double theta : linspace(0.1, kPi - 0.1, 25)) {
        const TridiagonalHamiltonian h = build_single_excitation(coupling_profile(p2, theta));
        const WaveVector numeric = eigenvector_for(h, 0.0);
        CHECK(std::abs(inner(analytic_edge_p2(p2, theta), numeric)) >= 1.0 - 1e-10);
    }

    const ChainSpec p3{3, 8, 0.0, 1.0};
    for (const double theta : linspace(kPi / 6.0 + 0.05, kPi / 2.0 - 0.05, 25)) {
        for (const EdgeBranch branch : {EdgeBranch::plus, EdgeBranch::minus}) {
            const auto [psi, energy] = analytic_edge_p3(p3, theta, branch);
            const TridiagonalHamiltonian h =
                build_single_excitation(coupling_profile(p3, theta));
            const WaveVector numeric = eigenvector_for(h, energy);
            CHECK(std::abs(inner(psi, numeric)) >= 1.0 - 1e-10);
        }
    }
}

TEST_CASE("p=2 sublattice support: zero amplitude on every b-site") {
    const ChainSpec spec{2, 21, 1.0, 1.0};
    for (const double theta : linspace(0.0, kPi, 37)) {
        const WaveVector psi = analytic_edge_p2(spec, theta);
        for (int i = 1; i < 21; i += 2)
            CHECK(psi.amplitudes[i] == std::complex<double>(0.0));
    }
}

TEST_CASE("p=2 mirror symmetry: |lambda(pi - theta)| = 1/|lambda(theta)|") {
    for (const double theta : {0.3, 0.7, 1.2}) {
        const double l1 = lambda_p2(1.0, 1.0, theta);
        const double l2 = lambda_p2(1.0, 1.0, kPi - theta);
        CHECK(std::abs(l1 * l2) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("landmark states") {
    const ChainSpec p2{2, 9, 1.0, 1.0};
    const WaveVector l = landmark(p2, Landmark::L);
    CHECK(l.amplitudes[0] == std::complex<double>(1.0));

    const WaveVector w = landmark(p2, Landmark::W);
    int nonzero = 0;
    for (const auto& a : w.amplitudes)
        if (std::abs(a) > 0.0) ++nonzero;
    CHECK(nonzero == 5);
    for (int x = 0; x < 5; ++x)
        CHECK(std::abs(std::abs(w.amplitudes[2 * x]) - 1.0 / std::sqrt(5.0)) < 1e-14);
    CHECK(w.amplitudes[0].real() > 0.0);
    CHECK(w.amplitudes[2].real() < 0.0);

    const ChainSpec p3{3, 8, 0.0, 1.0};
    const WaveVector rm = landmark(p3, Landmark::Rminus);
    CHECK(std::abs(rm.amplitudes[6] - 1.0 / std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(rm.amplitudes[7] + 1.0 / std::sqrt(2.0)) < 1e-14);

    // landmark names must match the chain period
    CHECK_THROWS_AS(landmark(p2, Landmark::Lplus), std::invalid_argument);
    CHECK_THROWS_AS(landmark(p3, Landmark::W), std::invalid_argument);
}

TEST_CASE("landmarks agree with the analytic states at their theta") {
    const ChainSpec p2{2, 9, 1.0, 1.0};
    CHECK(std::abs(inner(landmark(p2, Landmark::W), analytic_edge_p2(p2, kPi / 2.0))) >=
          1.0 - 1e-10);

    const ChainSpec p3{3, 14, 0.0, 1.0};
    for (const EdgeBranch b : {EdgeBranch::plus, EdgeBranch::minus}) {
        const Landmark lw = (b == EdgeBranch::plus) ? Landmark::Wplus : Landmark::Wminus;
        const auto [psi, energy] = analytic_edge_p3(p3, kPi / 3.0, b);
        CHECK(std::abs(inner(landmark(p3, lw), psi)) >= 1.0 - 1e-10);
    }
}
