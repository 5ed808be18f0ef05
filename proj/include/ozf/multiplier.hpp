#pragma once

#include <limits>
#include <vector>

#include "ozf/margin_lp.hpp"
#include "ozf/pd_harmonics.hpp"
#include "ozf/roots_grid.hpp"
#include "ozf/state_space.hpp"

namespace ozf {

/// Zames-Falb multiplier in the form M(z) = 1 - H(z): H is piecewise linear
/// in angle with pd node values c_j and H(1) = sum(alpha) <= 1. When a FIR
/// window is attached, M(z) = 1 - sum_{k=kmin}^{kmax} h_k z^{-k} instead.
struct ZFMultiplier {
    PwlCircleFunction H;
    double H1 = 0.0;  // H(1) = c_0, real
    bool has_fir = false;
    int kmin = 0;
    int kmax = 0;
    std::vector<double> h;    // h[k - kmin] multiplies z^{-k}
    double tail_bound = 0.0;  // symbol mass outside the window, >= |M_fir - M| on |z|=1
};

/// FIR form when attached, else 1 - pwl_eval(H, z).
cplx eval_multiplier(const ZFMultiplier& m, cplx z);

/// Build M = 1 - H from an optimal margin-LP primal point: node values
/// c = sqrt(N) V alpha. Requires t_star > 0 ("no multiplier exists at this
/// N") and rejects alpha = e_0 ("degenerate multiplier"), whose M is
/// identically zero. The node margins Re(q_j (1 - c_j)) <= -t_star carry
/// over verbatim from the LP rows.
ZFMultiplier synth_pwl_multiplier(const PrimalSolution& primal, const RootsGrid& grid);

/// Attach the FIR window k in [kmin, kmax] from the Fourier expansion of H
/// (the coefficient of z^{-k} is the Fourier coefficient at -k). For pd H
/// all coefficients are >= 0, so tail_bound = H(1) - window mass bounds the
/// truncation error uniformly on the circle.
ZFMultiplier fir_truncate(const ZFMultiplier& m, int kmin, int kmax);

struct FdiReport {
    int grid = 0;
    double worst_margin = 0.0;      // max over grid of 2 Re(M(z) (G(z) - 1/kappa))
    double certified_margin = 0.0;  // worst margin plus rigorous inter-node correction
    bool pass = false;
    cplx arg_z;  // grid point attaining worst_margin
};

/// Sampled check of 2 Re(M (G - 1/kappa)) on a uniform grid; pass iff the
/// worst sample is negative. No inter-node correction is applied, so
/// certified_margin == worst_margin here.
FdiReport verify_fdi_grid(const ZFMultiplier& m, const StateSpaceModel& ss, double kappa,
                          int grid_size);

/// Samplewise upper bound on |G'| along the circle: bound[s] dominates
/// |G'(w)| for every w within half a sample spacing of sample s, via the
/// resolvent Neumann estimate |G'(w)| <= |C| |B| (r / (1 - h r))^2 with
/// r = ||(zI - A)^{-1}||_F. Built once per plant; independent of kappa and
/// of the certification grid. Throws "oscillation bound unavailable" naming
/// the pole radius when a pole sits too close to the circle to certify.
struct DerivBoundTable {
    int size = 0;
    std::vector<double> bound;
};
DerivBoundTable build_deriv_bound_table(const StateSpaceModel& ss, int size = 1 << 18);

/// Certified FDI over the whole circle for the pwl form M = 1 - H. The grid
/// is rounded up to a multiple of H's N so H is linear on every arc; then on
/// each arc, with Phi = 2 Re(M (G - 1/kappa)),
///   Phi(z) <= max(Phi at arc endpoints) + 2 max_endpoint|1 - H| * osc,
/// where osc bounds the oscillation of G on the arc: the table's |G'| bound
/// times arc length times a 1.5 safety factor. pass iff the certified worst
/// value (certified_margin) is negative. Passing a prebuilt table avoids
/// rebuilding it per call.
FdiReport certify_global_fdi(const ZFMultiplier& m, const StateSpaceModel& ss, double kappa,
                             int grid_size, const DerivBoundTable* table = nullptr);

/// Worst grid margin of the d-fold Kronecker-lifted loop, computed through
/// the materialized MIMO transfer and hermitian eigenvalues, agrees with the
/// scalar worst margin to 1e-10.
bool kron_fdi_equivalence(const ZFMultiplier& m, const StateSpaceModel& ss, int d, int grid_size,
                          double kappa = std::numeric_limits<double>::infinity());

/// Multiplier synthesis against a fine uniform grid (rounded up to a
/// multiple of N) by violated-row generation: solve the N-variable margin LP
/// on an active subset of grid rows, add the worst <= 32 violated rows, and
/// repeat. ok iff the final alpha keeps Re(q (1 - H)) <= -t_fine < 0 on the
/// whole fine grid.
struct FineSynthResult {
    bool ok = false;
    ZFMultiplier m;
    double t_fine = 0.0;  // min over the fine grid of -Re(q (1 - H))
    int grid = 0;
    int rounds = 0;
};
FineSynthResult synth_fine_grid(const StateSpaceModel& ss, double kappa, int N, int fine_grid,
                                int max_rounds = 40);

/// One-call certified synthesis. Runs synth_fine_grid over a density ladder
/// (8, 16, 32 points per arc; near-parallel interpolated rows can defeat the
/// LP at one density yet solve cleanly at the next), then certifies each
/// candidate with certify_global_fdi on doubling grids up to 2^24. First
/// candidate whose certified margin goes negative wins; ok = false when the
/// whole ladder is exhausted.
struct CertifiedSynthResult {
    bool ok = false;
    ZFMultiplier m;
    FdiReport report;  // the passing certification, or the last attempt
    double t_fine = 0.0;
    int fine_grid = 0;
    int rounds = 0;
};
CertifiedSynthResult synth_certified(const StateSpaceModel& ss, double kappa, int N,
                                     const DerivBoundTable* table = nullptr);

}  // namespace ozf
