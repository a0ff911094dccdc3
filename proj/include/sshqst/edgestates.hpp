#ifndef SSHQST_EDGESTATES_HPP
#define SSHQST_EDGESTATES_HPP

#include "sshqst/model.hpp"

namespace sshqst {

enum class EdgeBranch { zero, plus, minus };
enum class EdgeSide { left, right, delocalized };

// Closed-form edge-state data: per-cell decay factor, cell amplitude
// pattern, and eigenenergy.
struct EdgeStateAnsatz {
    double lambda = 0.0;                 // per-cell geometric factor
    std::vector<double> cell_amplitudes; // (alpha, beta) or (alpha, beta, gamma)
    double energy = 0.0;
    EdgeBranch branch = EdgeBranch::zero;
};

// Named landmark states of the transfer protocols.
enum class Landmark { L, R, W, Lplus, Lminus, Rplus, Rminus, Wplus, Wminus };

// lambda = -J1/J2 = -(g0 - g1 cos theta)/(g0 + g1 cos theta) for the p=2
// zero mode. Throws std::domain_error at J2 = 0 (right-decoupled limit).
double lambda_p2(double g0, double g1, double theta);

// lambda = -/+ J2/J3 for the p=3 edge branches at g0 = 0.
// Throws std::domain_error at J3 = 0 (right-decoupled limit).
double lambda_p3(double g1, double theta, EdgeBranch branch);

// Zero-energy edge state of the odd p=2 chain: amplitude proportional to
// lambda^(x-1) on a-site x (qubits 1, 3, 5, ...), zero on b-sites. Exact
// eigenvector of the finite open chain, unit norm; leftmost (rightmost for
// |lambda| > 1) occupied amplitude real positive.
WaveVector analytic_edge_p2(const ChainSpec& spec, double theta);

// Edge state of the p=3 chain at g0 = 0, amplitudes proportional to
// lambda^(x-1) (1, +/-1)/sqrt(2) on each (a_x, b_x) pair, zero on c-sites.
// Returns the state and its energy +/-J1.
std::pair<WaveVector, double> analytic_edge_p3(const ChainSpec& spec, double theta,
                                               EdgeBranch branch);

// The named state as an explicit basis vector; throws if the name does not
// match the chain's period.
WaveVector landmark(const ChainSpec& spec, Landmark name);

EdgeSide edge_side(double lambda);

}  // namespace sshqst

#endif
