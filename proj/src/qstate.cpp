#include "spinchain/qstate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "spinchain/coherence.hpp"

namespace spinchain {

// Basis state -> spin bit pattern (A<<2 | B<<1 | C, bit set = down/-):
// +++ --- ++- +-+ -++ +-- -+- --+
static constexpr std::array<int, 8> kToBits = {0b000, 0b111, 0b001, 0b010,
                                               0b100, 0b011, 0b101, 0b110};

// Reindex from the listed basis order to plain binary (bit) order.
static Mat8 to_binary_order(const Mat8& rho) {
    Mat8 out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) out(kToBits[i], kToBits[j]) = rho(i, j);
    return out;
}

void CentralState::validate() const {
    if (std::abs(c.squaredNorm() - 1.0) > 1e-12)
        throw std::invalid_argument("central-state amplitudes must have unit norm");
}

CentralState CentralState::ghz() {
    CentralState s;
    s.c(0) = s.c(1) = 1.0 / std::sqrt(2.0);
    return s;
}

CentralState CentralState::w() {
    CentralState s;
    s.c(2) = s.c(3) = s.c(4) = 1.0 / std::sqrt(3.0);
    return s;
}

Mat8d coherence_matrix(const ChainParams& p, double t) {
    p.validate();
    std::array<double, 8> fields;
    for (int j = 1; j <= 8; ++j) fields[j - 1] = shifted_lambda(p.lambda, p.g, j);
    Mat8d f = Mat8d::Ones();
    // only 4 distinct fields -> at most 6 distinct off-diagonal values
    std::array<int, 4> reps = {1, 2, 3, 6};
    for (std::size_t a = 0; a < reps.size(); ++a) {
        for (std::size_t b = a + 1; b < reps.size(); ++b) {
            double la = fields[reps[a] - 1], lb = fields[reps[b] - 1];
            double val = la == lb ? 1.0 : field_coherence(p, la, lb, t);
            for (int j = 0; j < 8; ++j) {
                for (int jp = 0; jp < 8; ++jp) {
                    if ((fields[j] == la && fields[jp] == lb) ||
                        (fields[j] == lb && fields[jp] == la))
                        f(j, jp) = val;
                }
            }
        }
    }
    return f;
}

EvolvedState evolve_reduced(const CentralState& state, const Mat8d& f) {
    state.validate();
    EvolvedState ev;
    for (int j = 0; j < 8; ++j)
        for (int jp = 0; jp < 8; ++jp)
            ev.rho(j, jp) = state.c(j) * std::conj(state.c(jp)) * f(j, jp);
    Eigen::SelfAdjointEigenSolver<Mat8> es(ev.rho, Eigen::EigenvaluesOnly);
    ev.min_eigenvalue = es.eigenvalues().minCoeff();
    ev.psd = ev.min_eigenvalue >= -1e-10;
    return ev;
}

double npt_negativity(const Mat8& rho, unsigned transpose_mask) {
    if (transpose_mask == 0 || transpose_mask > 7)
        throw std::invalid_argument("transpose_mask must select 1..3 qubits");
    Mat8 b = to_binary_order(rho);
    Mat8 pt;
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            int xs = (x & ~transpose_mask) | (y & transpose_mask);
            int ys = (y & ~transpose_mask) | (x & transpose_mask);
            pt(xs, ys) = b(x, y);
        }
    }
    Eigen::SelfAdjointEigenSolver<Mat8> es(pt, Eigen::EigenvaluesOnly);
    double neg = 0.0;
    for (int i = 0; i < 8; ++i)
        if (es.eigenvalues()(i) < 0.0) neg += es.eigenvalues()(i);
    return -2.0 * neg;
}

double fidelity_with_pure(const Mat8& rho, const CentralState& phi) {
    phi.validate();
    double overlap = std::real(phi.c.dot(rho * phi.c));
    return std::sqrt(std::max(overlap, 0.0));
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double p = es.eigenvalues()(i);
        if (p < -1e-10) throw std::domain_error("density matrix eigenvalue below -1e-10");
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

double concurrence(const Eigen::Matrix4cd& rho2) {
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();  // sigma_y (x) sigma_y
    yy(0, 3) = -1, yy(1, 2) = 1, yy(2, 1) = 1, yy(3, 0) = -1;
    Eigen::Matrix4cd r = rho2 * yy * rho2.conjugate() * yy;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r);
    std::array<double, 4> l;
    for (int i = 0; i < 4; ++i)
        l[i] = std::sqrt(std::max(std::real(es.eigenvalues()(i)), 0.0));
    std::sort(l.begin(), l.end(), std::greater<>());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

Eigen::MatrixXcd partial_trace(const Mat8& rho, unsigned keep_mask) {
    if (keep_mask == 0 || keep_mask > 7)
        throw std::invalid_argument("keep_mask must select 1..3 qubits");
    Mat8 b = to_binary_order(rho);
    // compress kept bits (in A,B,C order) into a dense index
    std::array<unsigned, 3> kept_bits{};
    int n_kept = 0;
    for (unsigned bit : {kQubitA, kQubitB, kQubitC})
        if (keep_mask & bit) kept_bits[n_kept++] = bit;
    int dim = 1 << n_kept;
    auto kept_index = [&](int x) {
        int idx = 0;
        for (int i = 0; i < n_kept; ++i) idx = (idx << 1) | ((x & kept_bits[i]) ? 1 : 0);
        return idx;
    };
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    unsigned traced = 7u & ~keep_mask;
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
            if ((x & traced) == (y & traced)) out(kept_index(x), kept_index(y)) += b(x, y);
    return out;
}

}  // namespace spinchain
