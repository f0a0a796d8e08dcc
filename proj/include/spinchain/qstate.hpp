#pragma once

#include <Eigen/Dense>
#include <complex>

#include "spinchain/spectrum.hpp"

namespace spinchain {

using Mat8 = Eigen::Matrix<std::complex<double>, 8, 8>;
using Vec8 = Eigen::Vector<std::complex<double>, 8>;
using Mat8d = Eigen::Matrix<double, 8, 8>;

// Qubit bitmask for partial transpose / partial trace: A=4, B=2, C=1.
inline constexpr unsigned kQubitA = 4, kQubitB = 2, kQubitC = 1;

// Amplitudes over the 8 central-spin basis states
// (1:+++ 2:--- 3:++- 4:+-+ 5:-++ 6:+-- 7:-+- 8:--+).
struct CentralState {
    Vec8 c = Vec8::Zero();

    void validate() const;  // unit norm within 1e-12
    static CentralState ghz();  // (|+++> + |--->)/sqrt(2)
    static CentralState w();    // (|++-> + |+-+> + |-++>)/sqrt(3)
};

// f[j][j'] = |F(t)| for the dressed-field pair (lambda_j, lambda_j');
// symmetric, unit diagonal, only 6 distinct off-diagonal values.
Mat8d coherence_matrix(const ChainParams& p, double t);

struct EvolvedState {
    Mat8 rho;
    double min_eigenvalue = 0.0;
    bool psd = true;  // min_eigenvalue >= -1e-10
};

// rho_{jj'} = c_j * conj(c_j') * f_{jj'}.  The damping factors are moduli
// (the closed form has no phase), so PSD can fail for states mixing more
// than one dressed-field pair; that is reported, not thrown.
EvolvedState evolve_reduced(const CentralState& state, const Mat8d& f);

// E = -2 * sum(negative eigenvalues of the partial transpose over the
// qubits in transpose_mask).
double npt_negativity(const Mat8& rho, unsigned transpose_mask);

double fidelity_with_pure(const Mat8& rho, const CentralState& phi);  // sqrt(<phi|rho|phi>)

double von_neumann_entropy(const Eigen::MatrixXcd& rho);  // bits

// Wootters concurrence of a two-qubit state (basis |00>,|01>,|10>,|11>).
double concurrence(const Eigen::Matrix4cd& rho2);

// Keep the qubits in keep_mask (result basis ordered A before B before C).
Eigen::MatrixXcd partial_trace(const Mat8& rho, unsigned keep_mask);

}  // namespace spinchain
