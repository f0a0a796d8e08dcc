#include "spinchain/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinchain {

void ChainParams::validate() const {
    if (n_sites < 3 || n_sites % 2 == 0)
        throw std::invalid_argument("n_sites must be odd and >= 3");
    if (!std::isfinite(gamma) || !std::isfinite(lambda) || !std::isfinite(g))
        throw std::invalid_argument("gamma, lambda, g must be finite");
}

std::vector<int> momentum_grid(const ChainParams& p) {
    p.validate();
    std::vector<int> ks((p.n_sites - 1) / 2);
    for (std::size_t i = 0; i < ks.size(); ++i) ks[i] = static_cast<int>(i) + 1;
    return ks;
}

double shifted_lambda(double lambda, double g, int j) {
    switch (j) {
        case 1: return lambda + 1.5 * g;
        case 2: return lambda - 1.5 * g;
        case 3:
        case 4:
        case 5: return lambda + 0.5 * g;
        case 6:
        case 7:
        case 8: return lambda - 0.5 * g;
        default: throw std::invalid_argument("basis index j must be in 1..8");
    }
}

ModeData mode_data(const ChainParams& p, double lambda_eff, int k) {
    p.validate();
    if (k < 1 || k > (p.n_sites - 1) / 2)
        throw std::invalid_argument("mode index k outside 1..(N-1)/2");
    double q = 2.0 * std::numbers::pi * k / p.n_sites;
    ModeData m;
    m.k = k;
    m.epsilon = lambda_eff - std::cos(q);
    double gs = p.gamma * std::sin(q);
    m.omega = 2.0 * std::sqrt(m.epsilon * m.epsilon + gs * gs);
    // 2*eps/omega is in [-1,1] analytically; clamp against rounding
    m.theta = m.omega == 0.0
                  ? 0.0
                  : std::acos(std::clamp(2.0 * m.epsilon / m.omega, -1.0, 1.0));
    return m;
}

}  // namespace spinchain
