#pragma once

#include <vector>

#include "ozf/linalg.hpp"
#include "ozf/roots_grid.hpp"

namespace ozf {

/// Witness-carrying result of the positive-definite-sequence test.
struct PdReport {
    bool ok = false;
    double min_dft = 0.0;    // most negative DFT entry (the witness)
    double max_dft = 0.0;
    double worst_imag = 0.0;
};

/// True iff the circulant matrix (c_{j-k mod N}) is hermitian PSD,
/// equivalently the DFT of c is real with entries >= -1e-10 * max(1, max).
PdReport is_pd_sequence(const std::vector<cplx>& c);

/// Piecewise-linear (in angle) function on the unit circle with nodes at the
/// N-th roots of unity: f(e^{i omega}) interpolates value c_j at 2 pi j / N.
struct PwlCircleFunction {
    int N = 0;
    std::vector<cplx> values;
};

cplx pwl_eval_angle(const PwlCircleFunction& f, double omega);
/// Evaluation on the arc [j, j+1] at fraction s in [0,1]; exact at s=0,1.
cplx pwl_eval_arc(const PwlCircleFunction& f, int j, double s);
cplx pwl_eval(const PwlCircleFunction& f, cplx z);

/// Fourier coefficients h_k = (1/2pi) int f(e^{i w}) e^{-ikw} dw for
/// k = -K..K (returned at index k+K), by exact per-arc antiderivatives.
std::vector<cplx> pwl_fourier_coefficients(const PwlCircleFunction& f, int K);

/// Real-coefficient variant for conjugate-symmetric node values; throws
/// "symmetry violation" if an imaginary part exceeds 1e-10.
std::vector<double> pwl_fourier_real(const PwlCircleFunction& f, int K);

struct HyperdominanceReport {
    bool is_dhd = false;
    double row_sum_slack = 0.0;   // total symbol sum
    double worst_offdiag = 0.0;   // largest off-diagonal entry (violation if > 0)
};

/// Doubly hyperdominant test for the two-sided Toeplitz symbol
/// m_{kmin}..m_{kmin+len-1}: off-diagonal entries <= 0 and total sum >= 0,
/// both within 1e-12.
HyperdominanceReport is_doubly_hyperdominant(int kmin, const std::vector<double>& m);

}  // namespace ozf
