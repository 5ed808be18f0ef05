#include "ozf/margin_lp.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ozf/exact.hpp"
#include "ozf/simplex.hpp"

namespace ozf {

MarginProblem build_margin_problem(const StateSpaceModel& ss, int N, double kappa) {
    if (N < 1) throw std::invalid_argument("grid size must be positive");
    if (!(kappa > 0.0)) throw std::invalid_argument("slope bound must be positive");
    require_schur_stable(ss);
    MarginProblem p;
    p.grid = make_roots_grid(N);
    p.kappa = kappa;
    p.plant = ss;
    const double shift = std::isinf(kappa) ? 0.0 : 1.0 / kappa;
    p.q = symmetric_grid_eval(ss, p.grid, shift);
    return p;
}

namespace {

// Rows j = 0..N/2: t - sum_l Re(q_j z_j^l) alpha_l <= -Re q_j; last row: sum alpha <= 1.
// Grid rows j and N-j are bitwise identical (conjugate evaluation points under a
// real symbol), so only the closed upper half is emitted: duplicates change
// nothing mathematically but seed numerically singular bases in the solver.
// Variables (alpha_0..alpha_{N-1}, t+, t-), all nonnegative; maximize t+ - t-.
template <typename S>
LpProblem<S> margin_lp_data(const MarginProblem& p) {
    const int N = p.grid.N;
    const int half = N / 2;
    const size_t nr = static_cast<size_t>(half) + 1;  // grid rows j = 0..half
    LpProblem<S> lp;
    lp.nvar = N + 2;
    lp.rows.assign(nr + 1, std::vector<S>(static_cast<size_t>(N) + 2, S(0)));
    lp.rhs.assign(nr + 1, S(0));
    lp.rel.assign(nr + 1, Rel::LE);
    lp.objective.assign(static_cast<size_t>(N) + 2, S(0));
    lp.objective[static_cast<size_t>(N)] = S(1);
    lp.objective[static_cast<size_t>(N) + 1] = S(-1);
    for (int j = 0; j <= half; ++j) {
        const cplx qj = p.q[static_cast<size_t>(j)];
        for (int l = 0; l < N; ++l) {
            const cplx zjl = p.grid.power(j, l);
            const double r = qj.real() * zjl.real() - qj.imag() * zjl.imag();
            lp.rows[static_cast<size_t>(j)][static_cast<size_t>(l)] = S(-r);
        }
        lp.rows[static_cast<size_t>(j)][static_cast<size_t>(N)] = S(1);
        lp.rows[static_cast<size_t>(j)][static_cast<size_t>(N) + 1] = S(-1);
        lp.rhs[static_cast<size_t>(j)] = S(-qj.real());
    }
    for (int l = 0; l < N; ++l) lp.rows[nr][static_cast<size_t>(l)] = S(1);
    lp.rhs[nr] = S(1);
    return lp;
}

std::vector<double> node_margins(const MarginProblem& p, const std::vector<double>& alpha) {
    const int N = p.grid.N;
    std::vector<double> m(static_cast<size_t>(N));
    for (int j = 0; j < N; ++j) {
        cplx cj{};
        for (int l = 0; l < N; ++l) cj += p.grid.power(j, l) * alpha[static_cast<size_t>(l)];
        m[static_cast<size_t>(j)] = (p.q[static_cast<size_t>(j)] * (1.0 - cj)).real();
    }
    return m;
}

}  // namespace

DualCertificate symmetrize_dual(const DualCertificate& cert, const MarginProblem& p,
                                double t_star, double gap_tol) {
    const int N = p.grid.N;
    DualCertificate out = cert;
    for (int j = 1; 2 * j <= N - 1; ++j) {
        const double avg = 0.5 * (cert.mu[static_cast<size_t>(j)] + cert.mu[static_cast<size_t>(N - j)]);
        out.mu[static_cast<size_t>(j)] = avg;
        out.mu[static_cast<size_t>(N - j)] = avg;
    }
    double sum = std::accumulate(out.mu.begin(), out.mu.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-8) throw std::runtime_error("asymmetric plant data");
    for (double& v : out.mu) v /= sum;

    // re-verify dual feasibility after averaging
    double worst = 0.0;
    for (double v : out.mu) worst = std::max(worst, -v);
    for (int l = 0; l < N; ++l) {
        double lhs = 0.0;
        for (int j = 0; j < N; ++j) {
            const cplx t = p.q[static_cast<size_t>(j)] * p.grid.power(j, l);
            lhs += out.mu[static_cast<size_t>(j)] * t.real();
        }
        worst = std::max(worst, lhs - out.eta);
    }
    if (worst > 1e-8) throw std::runtime_error("asymmetric plant data");
    double obj = 0.0;
    for (int j = 0; j < N; ++j) obj += out.mu[static_cast<size_t>(j)] * p.q[static_cast<size_t>(j)].real();
    if (std::abs(out.eta - obj - t_star) > gap_tol) throw std::runtime_error("asymmetric plant data");
    return out;
}

MarginOutcome solve_margin_lp(const MarginProblem& p, bool exact_recheck) {
    const int N = p.grid.N;
    LpProblem<double> lp = margin_lp_data<double>(p);
    LpResult<double> res = [&] {
        try {
            return solve_lp(lp);
        } catch (const std::runtime_error& e) {
            if (std::string(e.what()) != "degenerate LP, enable exact mode" || !exact_recheck)
                throw;
            LpProblem<rational> rlp = margin_lp_data<rational>(p);
            LpResult<rational> rres = solve_lp(rlp);
            LpResult<double> conv;
            conv.value = static_cast<double>(rres.value);
            conv.x.assign(rres.x.size(), 0.0);
            for (size_t i = 0; i < rres.x.size(); ++i) conv.x[i] = static_cast<double>(rres.x[i]);
            conv.dual.assign(rres.dual.size(), 0.0);
            for (size_t i = 0; i < rres.dual.size(); ++i) conv.dual[i] = static_cast<double>(rres.dual[i]);
            conv.iterations = rres.iterations;
            return conv;
        }
    }();

    MarginOutcome out;
    out.primal.alpha.assign(res.x.begin(), res.x.begin() + N);
    if (res.perturbed) {
        // a perturbed solve can leave ~1e-5 slack in x: project back onto the
        // feasible set and report the margin the projected point itself earns
        double sum = 0.0;
        for (double& a : out.primal.alpha) {
            a = std::max(a, 0.0);
            sum += a;
        }
        if (sum > 1.0)
            for (double& a : out.primal.alpha) a /= sum;
    }
    out.primal.margins = node_margins(p, out.primal.alpha);
    if (res.perturbed) {
        double worst = -std::numeric_limits<double>::infinity();
        for (double m : out.primal.margins) worst = std::max(worst, m);
        out.primal.t_star = -worst;
    } else {
        out.primal.t_star = res.value;
    }

    // Spread each half-grid row weight back over its conjugate pair so mu is
    // indexed by the full grid; the split is exactly the symmetric certificate.
    const int half = N / 2;
    DualCertificate cert;
    cert.mu.assign(static_cast<size_t>(N), 0.0);
    for (int j = 0; j <= half; ++j) {
        const double y = res.dual[static_cast<size_t>(j)];
        if (j == 0 || 2 * j == N) {
            cert.mu[static_cast<size_t>(j)] = y;
        } else {
            cert.mu[static_cast<size_t>(j)] = 0.5 * y;
            cert.mu[static_cast<size_t>(N - j)] = 0.5 * y;
        }
    }
    cert.eta = res.dual[static_cast<size_t>(half) + 1];
    double dual_obj = cert.eta;
    for (int j = 0; j < N; ++j) dual_obj -= cert.mu[static_cast<size_t>(j)] * p.q[static_cast<size_t>(j)].real();
    cert.gap = std::abs(dual_obj - out.primal.t_star);
    out.dual = symmetrize_dual(cert, p, out.primal.t_star, res.perturbed ? 1e-4 : 1e-8);
    out.dual.gap = cert.gap;

    if (exact_recheck && out.primal.t_star < 1e-9) {
        LpProblem<rational> rlp = margin_lp_data<rational>(p);
        LpResult<rational> rres = solve_lp(rlp);
        out.exact_checked = true;
        out.certified_zero = rres.value == 0;
        out.primal.t_star = static_cast<double>(rres.value);
    }
    return out;
}

ShiftReport check_shift_conditions(const DualCertificate& cert, const MarginProblem& p,
                                   double t_star) {
    const int N = p.grid.N;
    ShiftReport r;
    cplx base{};
    for (int j = 0; j < N; ++j) base += cert.mu[static_cast<size_t>(j)] * p.q[static_cast<size_t>(j)];
    r.base = base.real();
    r.worst_violation = -t_star - r.base;  // first condition: -t* <= base
    for (int k = 0; k < N; ++k) {
        cplx s{};
        for (int j = 0; j < N; ++j)
            s += cert.mu[static_cast<size_t>(j)] * p.q[static_cast<size_t>(j)] * p.grid.power(j, k);
        r.worst_violation = std::max(r.worst_violation, s.real() - r.base - t_star);
    }
    return r;
}

ZhangReport check_zhang_condition_q(const std::vector<double>& mu, const std::vector<cplx>& q,
                                    const RootsGrid& grid) {
    const int N = grid.N;
    double total = 0.0;
    for (double v : mu) total += std::abs(v);
    if (total == 0.0) throw std::runtime_error("invalid certificate");
    ZhangReport r;
    r.worst_slack = 1e300;
    for (int k = 0; k < N; ++k) {
        double s = 0.0;
        for (int j = 0; j < N; ++j) {
            const cplx term = q[static_cast<size_t>(j)] * (1.0 - grid.power(j, -k));
            s += mu[static_cast<size_t>(j)] * term.real();
        }
        r.worst_slack = std::min(r.worst_slack, s);
    }
    for (int j = 0; j < N; ++j) r.unbiasedness += mu[static_cast<size_t>(j)] * q[static_cast<size_t>(j)].real();
    r.holds = r.worst_slack >= -1e-10;
    return r;
}

ZhangReport check_zhang_condition(const std::vector<double>& mu, const StateSpaceModel& ss,
                                  int N) {
    RootsGrid g = make_roots_grid(N);
    return check_zhang_condition_q(mu, symmetric_grid_eval(ss, g, 0.0), g);
}

PhaseReport check_phase_constraint(const StateSpaceModel& ss, int a, int b) {
    if (b < 1 || a < 0 || a >= b || std::gcd(a, b) != 1)
        throw std::runtime_error("invalid rational rotation");
    PhaseReport r;
    r.N = (a % 2 == 1) ? 2 * b : b;
    const double pi = std::acos(-1.0);
    const cplx z = std::polar(1.0, pi * a / b);
    const cplx g = eval_transfer(ss, z);
    r.phase = std::abs(std::arg(g));
    r.bound = pi / r.N;
    r.holds = r.phase <= r.bound + 1e-12;
    return r;
}

}  // namespace ozf
