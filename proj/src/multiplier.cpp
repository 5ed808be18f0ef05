#include "ozf/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "ozf/simplex.hpp"

namespace ozf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx eval_fir(const ZFMultiplier& m, cplx z) {
    cplx acc{};
    cplx p = std::pow(z, -m.kmin);  // z^{-k} at k = kmin
    const cplx zi = 1.0 / z;
    for (int k = m.kmin; k <= m.kmax; ++k) {
        acc += m.h[static_cast<size_t>(k - m.kmin)] * p;
        p *= zi;
    }
    return 1.0 - acc;
}

}  // namespace

cplx eval_multiplier(const ZFMultiplier& m, cplx z) {
    if (m.has_fir) return eval_fir(m, z);
    return 1.0 - pwl_eval(m.H, z);
}

ZFMultiplier synth_pwl_multiplier(const PrimalSolution& primal, const RootsGrid& grid) {
    const int N = grid.N;
    if (N < 1 || static_cast<int>(primal.alpha.size()) != N)
        throw std::invalid_argument("alpha length does not match grid");
    if (!(primal.t_star > 0.0)) throw std::runtime_error("no multiplier exists at this N");
    double sum = 0.0;
    for (double a : primal.alpha) {
        if (!(a >= -1e-10)) throw std::invalid_argument("alpha must be nonnegative");
        sum += a;
    }
    if (!(sum <= 1.0 + 1e-9)) throw std::invalid_argument("H(1) exceeds 1");

    ZFMultiplier m;
    m.H.N = N;
    m.H.values.assign(static_cast<size_t>(N), cplx{});
    for (int j = 0; j < N; ++j) {
        cplx c{};
        for (int l = 0; l < N; ++l) c += grid.power(j, l) * primal.alpha[static_cast<size_t>(l)];
        m.H.values[static_cast<size_t>(j)] = c;
    }
    m.H1 = m.H.values[0].real();  // power(0, l) = 1 exactly, so c_0 = sum(alpha)

    double dist = 0.0;  // distance of H from the constant 1, i.e. of M from 0
    for (const cplx& c : m.H.values) dist = std::max(dist, std::abs(c - 1.0));
    if (dist <= 1e-12) throw std::runtime_error("degenerate multiplier");
    return m;
}

ZFMultiplier fir_truncate(const ZFMultiplier& m, int kmin, int kmax) {
    if (kmin > kmax) throw std::invalid_argument("empty FIR window");
    if (m.H.N < 1) throw std::invalid_argument("multiplier has no pwl data");
    const int K = std::max(std::abs(kmin), std::abs(kmax));
    const std::vector<double> hk = pwl_fourier_real(m.H, K);  // index k + K
    ZFMultiplier out = m;
    out.has_fir = true;
    out.kmin = kmin;
    out.kmax = kmax;
    out.h.assign(static_cast<size_t>(kmax - kmin + 1), 0.0);
    double window = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        const double v = hk[static_cast<size_t>(K - k)];  // z^{-k} carries coefficient at -k
        out.h[static_cast<size_t>(k - kmin)] = v;
        window += v;
    }
    out.tail_bound = std::max(0.0, m.H1 - window);
    return out;
}

FdiReport verify_fdi_grid(const ZFMultiplier& m, const StateSpaceModel& ss, double kappa,
                          int grid_size) {
    if (grid_size < 1) throw std::invalid_argument("grid size must be positive");
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
    require_schur_stable(ss);
    const double shift = std::isinf(kappa) ? 0.0 : 1.0 / kappa;

    FdiReport rep;
    rep.grid = grid_size;
    double worst = -std::numeric_limits<double>::infinity();
    cplx argz = 1.0;
    for (int i = 0; i < grid_size; ++i) {
        const cplx z = std::polar(1.0, kTwoPi * i / grid_size);
        const cplx q = eval_transfer(ss, z) - shift;
        const double phi = 2.0 * (eval_multiplier(m, z) * q).real();
        if (phi > worst) {
            worst = phi;
            argz = z;
        }
    }
    rep.worst_margin = worst;
    rep.certified_margin = worst;
    rep.pass = worst < 0.0;
    rep.arg_z = argz;
    return rep;
}

DerivBoundTable build_deriv_bound_table(const StateSpaceModel& ss, int size) {
    if (size < 8) throw std::invalid_argument("table size must be at least 8");
    require_schur_stable(ss);
    DerivBoundTable t;
    t.size = size;
    t.bound.assign(static_cast<size_t>(size), 0.0);
    const int n = ss.n;
    if (n == 0) return t;  // static gain: G' = 0

    double nb2 = 0.0, nc2 = 0.0;
    for (int j = 0; j < n; ++j) {
        nb2 += ss.B(j, 0) * ss.B(j, 0);
        nc2 += ss.C(0, j) * ss.C(0, j);
    }
    const double cb = std::sqrt(nb2) * std::sqrt(nc2);
    const double h = std::numbers::pi / size;  // half the sample spacing, >= chord radius

    for (int s = 0; s < size; ++s) {
        const cplx z = std::polar(1.0, kTwoPi * s / size);
        // Frobenius norm of (zI - A)^{-1}, column by column.
        double r2 = 0.0;
        for (int col = 0; col < n; ++col) {
            CMat zia(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) zia(i, j) = (i == j ? z : cplx{}) - ss.A(i, j);
            std::vector<cplx> e(static_cast<size_t>(n), cplx{});
            e[static_cast<size_t>(col)] = 1.0;
            const std::vector<cplx> x = lu_solve(std::move(zia), std::move(e));
            for (const cplx& v : x) r2 += std::norm(v);
        }
        const double r = std::sqrt(r2);
        const double denom = 1.0 - h * r;
        if (denom <= 0.1)
            throw std::runtime_error("oscillation bound unavailable: pole radius " +
                                     std::to_string(spectral_radius(ss.A)));
        const double rb = r / denom;
        t.bound[static_cast<size_t>(s)] = cb * rb * rb;
    }
    return t;
}

namespace {

// Max of table.bound over samples whose coverage intersects the arc
// [theta_lo, theta_hi]; indices wrap around the circle.
double arc_deriv_bound(const DerivBoundTable& t, double theta_lo, double theta_hi) {
    const double step = kTwoPi / t.size;
    const long lo = static_cast<long>(std::floor(theta_lo / step - 0.5)) - 1;
    const long hi = static_cast<long>(std::ceil(theta_hi / step + 0.5)) + 1;
    double best = 0.0;
    for (long s = lo; s <= hi; ++s) {
        long idx = s % t.size;
        if (idx < 0) idx += t.size;
        best = std::max(best, t.bound[static_cast<size_t>(idx)]);
    }
    return best;
}

}  // namespace

FdiReport certify_global_fdi(const ZFMultiplier& m, const StateSpaceModel& ss, double kappa,
                             int grid_size, const DerivBoundTable* table) {
    if (m.H.N < 1) throw std::invalid_argument("multiplier has no pwl data");
    if (grid_size < 1) throw std::invalid_argument("grid size must be positive");
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
    require_schur_stable(ss);

    DerivBoundTable local;
    if (table == nullptr) {
        local = build_deriv_bound_table(ss);
        table = &local;
    }

    const int N = m.H.N;
    const int ppa = std::max(1, (grid_size + N - 1) / N);  // fine points per pwl arc
    const int Nf = ppa * N;
    const double shift = std::isinf(kappa) ? 0.0 : 1.0 / kappa;
    const double arclen = kTwoPi / Nf;

    // Stream over the fine grid; H is linear on each fine arc because every
    // pwl node is a fine node.
    const auto phi_at = [&](int i, double& one_minus_h) {
        const int j = i / ppa;
        const double s = static_cast<double>(i % ppa) / ppa;
        const cplx cj = m.H.values[static_cast<size_t>(j)];
        const cplx cj1 = m.H.values[static_cast<size_t>((j + 1) % N)];
        const cplx hv = (1.0 - s) * cj + s * cj1;
        const cplx z = std::polar(1.0, arclen * i);
        const cplx q = eval_transfer(ss, z) - shift;
        one_minus_h = std::abs(1.0 - hv);
        return 2.0 * ((1.0 - hv) * q).real();
    };

    FdiReport rep;
    rep.grid = Nf;
    double worst = -std::numeric_limits<double>::infinity();
    double certified = -std::numeric_limits<double>::infinity();
    cplx argz = 1.0;

    double mh_first = 0.0, mh_prev = 0.0;
    const double phi_first = phi_at(0, mh_first);
    double phi_prev = phi_first;
    mh_prev = mh_first;
    worst = phi_first;
    argz = 1.0;
    for (int i = 1; i <= Nf; ++i) {
        double mh = 0.0, phi = 0.0;
        if (i == Nf) {
            mh = mh_first;
            phi = phi_first;
        } else {
            phi = phi_at(i, mh);
            if (phi > worst) {
                worst = phi;
                argz = std::polar(1.0, arclen * i);
            }
        }
        const double locb = arc_deriv_bound(*table, arclen * (i - 1), arclen * i);
        const double osc = locb * arclen * 1.5;
        const double cand = std::max(phi_prev, phi) + 2.0 * std::max(mh_prev, mh) * osc;
        certified = std::max(certified, cand);
        phi_prev = phi;
        mh_prev = mh;
    }

    rep.worst_margin = worst;
    rep.certified_margin = certified;
    rep.pass = certified < 0.0;
    rep.arg_z = argz;
    return rep;
}

bool kron_fdi_equivalence(const ZFMultiplier& m, const StateSpaceModel& ss, int d, int grid_size,
                          double kappa) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (grid_size < 1) throw std::invalid_argument("grid size must be positive");
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
    require_schur_stable(ss);
    const double shift = std::isinf(kappa) ? 0.0 : 1.0 / kappa;
    const MimoStateSpace lifted = materialize(kron_lift(ss, d));

    double scalar_worst = -std::numeric_limits<double>::infinity();
    double lifted_worst = scalar_worst;
    for (int i = 0; i < grid_size; ++i) {
        const cplx z = std::polar(1.0, kTwoPi * i / grid_size);
        const cplx mz = eval_multiplier(m, z);
        const cplx q = eval_transfer(ss, z) - shift;
        scalar_worst = std::max(scalar_worst, 2.0 * (mz * q).real());

        const CMat gl = eval_transfer_mimo(lifted, z);
        CMat herm(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                const cplx frc = mz * (gl(r, c) - (r == c ? shift : 0.0));
                const cplx fcr = mz * (gl(c, r) - (r == c ? shift : 0.0));
                herm(r, c) = frc + std::conj(fcr);
            }
        const std::vector<double> lam = hermitian_eigenvalues(herm);
        for (double v : lam) lifted_worst = std::max(lifted_worst, v);
    }
    return std::abs(scalar_worst - lifted_worst) <= 1e-10;
}

FineSynthResult synth_fine_grid(const StateSpaceModel& ss, double kappa, int N, int fine_grid,
                                int max_rounds) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (fine_grid < 1) throw std::invalid_argument("grid size must be positive");
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
    if (max_rounds < 1) throw std::invalid_argument("max_rounds must be positive");
    require_schur_stable(ss);

    const RootsGrid grid = make_roots_grid(N);
    const int ppa = std::max(1, (fine_grid + N - 1) / N);
    const int Nf = ppa * N;
    const double shift = std::isinf(kappa) ? 0.0 : 1.0 / kappa;

    // Evaluate the shifted response on the closed upper half arc and mirror it,
    // so rows at i and Nf - i are bitwise conjugate; only the half arc enters
    // the LP (the mirror rows are the same constraints and would seed
    // numerically singular bases).
    const int half_f = Nf / 2;
    std::vector<cplx> q(static_cast<size_t>(Nf));
    for (int i = 0; i <= half_f; ++i)
        q[static_cast<size_t>(i)] = eval_transfer(ss, std::polar(1.0, kTwoPi * i / Nf)) - shift;
    for (int i = half_f + 1; i < Nf; ++i)
        q[static_cast<size_t>(i)] = std::conj(q[static_cast<size_t>(Nf - i)]);

    std::set<int> active;
    for (int j = 0; 2 * j <= N; ++j) active.insert(j * ppa);

    FineSynthResult res;
    res.grid = Nf;

    std::vector<double> alpha(static_cast<size_t>(N), 0.0);
    double t_star = 0.0;
    std::vector<cplx> c(static_cast<size_t>(N));

    for (int round = 1; round <= max_rounds; ++round) {
        res.rounds = round;
        // Margin LP restricted to the active rows: variables (alpha, t+, t-).
        // Interpolated rows a fraction of an arc apart are nearly parallel and
        // the margin separating them is ~1e-5, so the solve runs in extended
        // precision: double's epsilon amplified by the basis conditioning eats
        // the whole margin, long double keeps three digits of headroom.
        LpProblem<long double> lp;
        lp.nvar = N + 2;
        for (int i : active) {
            const int j = i / ppa;
            const double s = static_cast<double>(i % ppa) / ppa;
            std::vector<long double> row(static_cast<size_t>(N + 2), 0.0L);
            const cplx qi = q[static_cast<size_t>(i)];
            for (int l = 0; l < N; ++l) {
                const cplx phi = (1.0 - s) * grid.power(j, l) + s * grid.power((j + 1) % N, l);
                row[static_cast<size_t>(l)] = -(qi.real() * phi.real() - qi.imag() * phi.imag());
            }
            row[static_cast<size_t>(N)] = 1.0L;
            row[static_cast<size_t>(N + 1)] = -1.0L;
            lp.rows.push_back(std::move(row));
            lp.rhs.push_back(-qi.real());
            lp.rel.push_back(Rel::LE);
        }
        {
            std::vector<long double> row(static_cast<size_t>(N + 2), 0.0L);
            for (int l = 0; l < N; ++l) row[static_cast<size_t>(l)] = 1.0L;
            lp.rows.push_back(std::move(row));
            lp.rhs.push_back(1.0L);
            lp.rel.push_back(Rel::LE);
        }
        lp.objective.assign(static_cast<size_t>(N + 2), 0.0L);
        lp.objective[static_cast<size_t>(N)] = 1.0L;
        lp.objective[static_cast<size_t>(N + 1)] = -1.0L;

        LpResult<long double> sol;
        try {
            sol = solve_lp(lp);
        } catch (const std::runtime_error& e) {
            if (std::string(e.what()) == "degenerate LP, enable exact mode") {
                res.ok = false;
                return res;
            }
            throw;
        }
        t_star = static_cast<double>(sol.value);
        if (!(t_star > 1e-9)) {
            res.ok = false;
            return res;
        }
        for (int l = 0; l < N; ++l)
            alpha[static_cast<size_t>(l)] = std::max(0.0, static_cast<double>(sol.x[static_cast<size_t>(l)]));
        if (sol.perturbed) {
            // a perturbed solve can leave ~1e-5 slack in x: project back onto
            // the feasible set before trusting alpha downstream
            double sum = 0.0;
            for (double a : alpha) sum += a;
            if (sum > 1.0)
                for (double& a : alpha) a /= sum;
        }

        for (int j = 0; j < N; ++j) {
            cplx v{};
            for (int l = 0; l < N; ++l) v += grid.power(j, l) * alpha[static_cast<size_t>(l)];
            c[static_cast<size_t>(j)] = v;
        }

        if (sol.perturbed) {
            // re-derive the margin the projected point actually earns on the
            // active rows so the scan threshold below stays honest
            double worst_active = -std::numeric_limits<double>::infinity();
            for (int i : active) {
                const int j = i / ppa;
                const double s = static_cast<double>(i % ppa) / ppa;
                const cplx hv = (1.0 - s) * c[static_cast<size_t>(j)] +
                                s * c[static_cast<size_t>((j + 1) % N)];
                worst_active = std::max(worst_active, ((1.0 - hv) * q[static_cast<size_t>(i)]).real());
            }
            t_star = -worst_active;
            if (!(t_star > 1e-9)) {
                res.ok = false;
                return res;
            }
        }

        // Scan the fine grid for violated rows; the lower half arc mirrors the
        // upper one, so the closed upper half covers every constraint.
        std::vector<std::pair<double, int>> viol;
        double worst_phi = -std::numeric_limits<double>::infinity();
        for (int i = 0; i <= half_f; ++i) {
            const int j = i / ppa;
            const double s = static_cast<double>(i % ppa) / ppa;
            const cplx hv = (1.0 - s) * c[static_cast<size_t>(j)] +
                            s * c[static_cast<size_t>((j + 1) % N)];
            const double phi = ((1.0 - hv) * q[static_cast<size_t>(i)]).real();
            worst_phi = std::max(worst_phi, phi);
            if (phi > -t_star + 1e-11 && active.find(i) == active.end())
                viol.emplace_back(phi, i);
        }
        if (viol.empty()) {
            res.ok = true;
            res.t_fine = -worst_phi;
            break;
        }
        std::sort(viol.begin(), viol.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        const size_t add = std::min<size_t>(32, viol.size());
        for (size_t k = 0; k < add; ++k) active.insert(viol[k].second);
    }

    if (!res.ok) return res;

    PrimalSolution primal;
    primal.t_star = t_star;
    primal.alpha = alpha;
    primal.margins.assign(static_cast<size_t>(N), 0.0);
    for (int j = 0; j < N; ++j)
        primal.margins[static_cast<size_t>(j)] =
            ((1.0 - c[static_cast<size_t>(j)]) * q[static_cast<size_t>(j * ppa)]).real();
    res.m = synth_pwl_multiplier(primal, grid);
    return res;
}

CertifiedSynthResult synth_certified(const StateSpaceModel& ss, double kappa, int N,
                                     const DerivBoundTable* table) {
    DerivBoundTable local;
    if (table == nullptr) {
        local = build_deriv_bound_table(ss);
        table = &local;
    }
    CertifiedSynthResult res;
    for (int ppa : {8, 16, 32}) {
        FineSynthResult fs;
        try {
            fs = synth_fine_grid(ss, kappa, N, ppa * N);
        } catch (const std::runtime_error& e) {
            const std::string what = e.what();
            if (what == "infeasible LP" || what == "unbounded LP")
                continue;  // numeric failure at this density; the next is geometrically fresh
            throw;
        }
        if (!fs.ok) continue;
        for (int g = 1 << 18; g <= (1 << 24); g *= 2) {
            const FdiReport rep = certify_global_fdi(fs.m, ss, kappa, g, table);
            res.report = rep;
            if (rep.pass) {
                res.ok = true;
                res.m = fs.m;
                res.t_fine = fs.t_fine;
                res.fine_grid = fs.grid;
                res.rounds = fs.rounds;
                return res;
            }
        }
    }
    return res;
}

}  // namespace ozf
