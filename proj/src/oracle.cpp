#include "spinchain/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinchain::oracle {

using std::complex;
constexpr complex<double> I{0.0, 1.0};

Mat4 build_mode_hamiltonian(const ChainParams& p, double lambda_eff, int k) {
    p.validate();
    if (k < 1 || k > (p.n_sites - 1) / 2)
        throw std::invalid_argument("mode index k outside 1..(N-1)/2");
    double q = 2.0 * std::numbers::pi * k / p.n_sites;
    double eps = lambda_eff - std::cos(q);
    double pairing = 2.0 * p.gamma * std::sin(q);
    Mat4 h = Mat4::Zero();
    h(1, 1) = 4.0 * eps;  // both pair levels occupied
    h(2, 2) = 2.0 * eps;  // odd sector, one fermion
    h(3, 3) = 2.0 * eps;
    h(0, 1) = I * pairing;  // d_k^+ d_-k^+ + h.c.
    h(1, 0) = -I * pairing;
    return h;
}

Vec4 ground_state(const Mat4& h) {
    Eigen::SelfAdjointEigenSolver<Mat4> es(h);
    Vec4 v = es.eigenvectors().col(0);
    for (int i = 0; i < 4; ++i) {
        if (std::abs(v(i)) > 1e-12) {
            v *= std::conj(v(i)) / std::abs(v(i));  // first big component real positive
            break;
        }
    }
    return v;
}

static Mat4 evolve(const Mat4& h, double t) {
    Eigen::SelfAdjointEigenSolver<Mat4> es(h);
    Vec4 phases;
    for (int i = 0; i < 4; ++i) phases(i) = std::exp(-I * es.eigenvalues()(i) * t);
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

complex<double> mode_overlap(const ChainParams& p, double lambda1, double lambda2,
                             int k, double t) {
    Mat4 u1 = evolve(build_mode_hamiltonian(p, lambda1, k), t);
    Mat4 u2 = evolve(build_mode_hamiltonian(p, lambda2, k), t);
    Vec4 vac = Vec4::Unit(0);
    return vac.dot(u2.adjoint() * u1 * vac);
}

double oracle_coherence(const ChainParams& p, PairSelector pair, double t) {
    double l1 = shifted_lambda(p.lambda, p.g, pair.j);
    double l2 = shifted_lambda(p.lambda, p.g, pair.j_prime);
    double prod = 1.0;
    for (int k : momentum_grid(p)) {
        prod *= std::abs(mode_overlap(p, l1, l2, k, t));
        if (prod == 0.0) break;
    }
    return std::min(prod, 1.0);
}

}  // namespace spinchain::oracle
