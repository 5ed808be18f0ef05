#pragma once

#include <vector>

#include "ozf/linalg.hpp"
#include "ozf/signal.hpp"

namespace ozf {

/// Discrete-time SISO LTI plant x+ = Ax + Bu, y = Cx + Du.
struct StateSpaceModel {
    Mat A;       // n x n
    Mat B;       // n x 1
    Mat C;       // 1 x n
    double D = 0.0;
    int n = 0;
};

StateSpaceModel from_state_space(Mat A, Mat B, Mat C, double D);

/// Builds the controllable canonical realization of num(z)/den(z), both in
/// descending powers of z. Requires deg(num) <= deg(den); the direct term D
/// is the ratio of leading coefficients when degrees match.
StateSpaceModel from_transfer(std::vector<double> num, std::vector<double> den);

StateSpaceModel static_gain(double c);

/// G(z) = C (zI - A)^{-1} B + D. Throws "pole on evaluation point" when the
/// resolvent is singular at z.
cplx eval_transfer(const StateSpaceModel& ss, cplx z);

/// G'(z) = -C (zI - A)^{-2} B.
cplx eval_transfer_derivative(const StateSpaceModel& ss, cplx z);

bool is_schur_stable(const StateSpaceModel& ss);
void require_schur_stable(const StateSpaceModel& ss);  // throws "plant not Schur-stable"

/// Supremum of kappa > 0 such that 1 - kappa G(z) has no unit-circle zero:
/// 1 / max of the positive real-axis crossings of the Nyquist locus, +inf
/// when the locus never crosses the positive real axis. Crossings are found
/// on a frequency grid by sign changes of Im G plus the exact real-arithmetic
/// evaluations at z = +1 and z = -1, each refined by bisection.
double nyquist_value(const StateSpaceModel& ss, int grid_size = 1 << 14);

/// G(z) I_d realized blockwise; kept in factored form. State is an n x d
/// matrix X with X+ = A X + B y^T and output (C X)^T + D y, which matches
/// the Kronecker realization (A (x) I_d, ...) under row-major flattening.
struct LiftedStateSpace {
    StateSpaceModel base;
    int d = 1;
};

LiftedStateSpace kron_lift(const StateSpaceModel& ss, int d);

Mat kron_identity(const Mat& m, int d);

/// Dense materialization of a lifted model, for cross-checks.
struct MimoStateSpace {
    Mat A, B, C, D;
};
MimoStateSpace materialize(const LiftedStateSpace& l);
CMat eval_transfer_mimo(const MimoStateSpace& m, cplx z);

/// One step of the lifted recursion: X is n x d, y has length d; returns the
/// d-dimensional output and overwrites X with the successor state.
std::vector<double> lifted_step(const LiftedStateSpace& l, Mat& X, const std::vector<double>& y);

/// Initial state making the response to the N-periodic input exactly
/// N-periodic: X0 = (I - A^N)^{-1} sum_j A^{N-1-j} B y_j^T. Throws
/// "eigenvalue on unit circle" when I - A^N is singular.
Mat periodic_initial_state_lifted(const StateSpaceModel& ss,
                                  const std::vector<std::vector<double>>& y_period);
std::vector<double> periodic_initial_state(const StateSpaceModel& ss, const Signal& y_period);

}  // namespace ozf
