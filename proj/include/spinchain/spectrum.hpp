#pragma once

#include <vector>

namespace spinchain {

// Transverse-field XY ring: N sites (odd), anisotropy gamma, field lambda,
// central-qubit coupling g.
struct ChainParams {
    int n_sites = 101;
    double gamma = 1.0;
    double lambda = 1.0;
    double g = 0.1;

    void validate() const;  // throws std::invalid_argument
};

// Ordered pair of central-spin basis states j, j' in 1..8.  Basis order:
// 1:+++  2:---  3:++-  4:+-+  5:-++  6:+--  7:-+-  8:--+
struct PairSelector {
    int j = 1;
    int j_prime = 2;
};

// Per-mode kinematics for one dressed field lambda_eff.
struct ModeData {
    int k = 0;
    double epsilon = 0.0;  // lambda_eff - cos(2*pi*k/N)
    double omega = 0.0;    // 2*sqrt(epsilon^2 + gamma^2*sin^2(2*pi*k/N))
    double theta = 0.0;    // in [0,pi]; convention theta = 0 when omega = 0
};

// k = 1..(N-1)/2; only positive momenta enter the mode product.
std::vector<int> momentum_grid(const ChainParams& p);

// Field seen by the chain conditioned on central basis state j:
// lambda +- 3g/2 for j in {1,2}, lambda +- g/2 for j in {3..5},{6..8}.
double shifted_lambda(double lambda, double g, int j);

ModeData mode_data(const ChainParams& p, double lambda_eff, int k);

}  // namespace spinchain
