#pragma once

#include <vector>

#include "ozf/roots_grid.hpp"
#include "ozf/state_space.hpp"

namespace ozf {

/// Margin program data on the N-th roots of unity: find a convex combination
/// c = sqrt(N) V alpha of root columns with Re(q_j (1 - c_j)) <= -t at every
/// node, maximizing the margin t. q_j = G(z_j) - 1/kappa.
struct MarginProblem {
    RootsGrid grid;
    std::vector<cplx> q;
    double kappa = 0.0;  // +inf means no slope shift
    StateSpaceModel plant;
};

struct PrimalSolution {
    double t_star = 0.0;
    std::vector<double> alpha;
    std::vector<double> margins;  // Re(q_j (1 - c_j)) per node, all <= -t_star
};

struct DualCertificate {
    std::vector<double> mu;
    double eta = 0.0;
    double gap = 0.0;
};

struct MarginOutcome {
    PrimalSolution primal;
    DualCertificate dual;
    bool exact_checked = false;   // the rational recheck ran
    bool certified_zero = false;  // rational optimum of the same data is exactly 0
};

MarginProblem build_margin_problem(const StateSpaceModel& ss, int N, double kappa);

/// Two-phase simplex solve with dual extraction. When t* < 1e-9 and
/// exact_recheck is set, the identical constraint data is re-solved in exact
/// rational arithmetic to decide t* = 0; the dual is returned symmetrized
/// and normalized.
MarginOutcome solve_margin_lp(const MarginProblem& p, bool exact_recheck = true);

/// mu_j <- (mu_j + mu_{N-j})/2, renormalized to sum 1. Exactly feasibility
/// preserving because LP rows j and N-j are bitwise identical. Throws
/// "asymmetric plant data" if certificate invariants break beyond gap_tol
/// (widened by the caller when the LP solve carried extra slack).
DualCertificate symmetrize_dual(const DualCertificate& cert, const MarginProblem& p,
                                double t_star, double gap_tol = 1e-8);

struct ShiftReport {
    double worst_violation = 0.0;  // <= 1e-8 for a valid certificate
    double base = 0.0;             // Re sum_j mu_j q_j
};
/// Conditions obtained by eliminating eta from the dual: -t* <= Re sum mu q
/// and Re sum_j mu_j q_j z_j^k <= Re sum mu q + t* for every k.
ShiftReport check_shift_conditions(const DualCertificate& cert, const MarginProblem& p,
                                   double t_star);

struct ZhangReport {
    bool holds = false;
    double worst_slack = 0.0;    // min over k of the tested inequality
    double unbiasedness = 0.0;   // sum_j mu_j Re G(z_j)
};
/// Multiplier-nonexistence condition: sum_j mu_j Re(G(z_j)(1 - z_j^{-k})) >= 0
/// for all k, evaluated for a nonnegative weight vector mu.
ZhangReport check_zhang_condition(const std::vector<double>& mu, const StateSpaceModel& ss,
                                  int N);
ZhangReport check_zhang_condition_q(const std::vector<double>& mu, const std::vector<cplx>& q,
                                    const RootsGrid& grid);

struct PhaseReport {
    bool holds = false;
    int N = 0;
    double phase = 0.0;
    double bound = 0.0;
};
/// Phase test at the rational rotation e^{i pi a / b} (a, b coprime,
/// 0 <= a < b): |arg G| <= pi/N with N = 2b for odd a and N = b for even a.
PhaseReport check_phase_constraint(const StateSpaceModel& ss, int a, int b);

}  // namespace ozf
