#include "ozf/state_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ozf {

StateSpaceModel from_state_space(Mat A, Mat B, Mat C, double D) {
    const int n = A.rows;
    if (A.cols != n || B.rows != n || B.cols != 1 || C.rows != 1 || C.cols != n)
        throw std::invalid_argument("state-space dimensions inconsistent");
    StateSpaceModel ss;
    ss.A = std::move(A);
    ss.B = std::move(B);
    ss.C = std::move(C);
    ss.D = D;
    ss.n = n;
    return ss;
}

StateSpaceModel from_transfer(std::vector<double> num, std::vector<double> den) {
    while (!den.empty() && den.front() == 0.0) den.erase(den.begin());
    if (den.empty()) throw std::invalid_argument("zero denominator");
    while (num.size() > 1 && num.front() == 0.0) num.erase(num.begin());
    if (num.size() > den.size()) throw std::invalid_argument("improper transfer function");

    const double lead = den.front();
    for (double& v : den) v /= lead;
    for (double& v : num) v /= lead;

    const int n = static_cast<int>(den.size()) - 1;
    std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
    std::copy(num.begin(), num.end(), b.end() - static_cast<long>(num.size()));
    const double D = b[0];
    // strictly proper remainder b - D * den, coefficients of z^{n-1}..z^0
    std::vector<double> c(static_cast<size_t>(n), 0.0);
    for (int i = 1; i <= n; ++i) c[static_cast<size_t>(i) - 1] = b[static_cast<size_t>(i)] - D * den[static_cast<size_t>(i)];

    Mat A(n, n), B(n, 1), C(1, n);
    for (int j = 0; j < n; ++j) A(0, j) = -den[static_cast<size_t>(j) + 1];
    for (int i = 1; i < n; ++i) A(i, i - 1) = 1.0;
    if (n > 0) B(0, 0) = 1.0;
    for (int j = 0; j < n; ++j) C(0, j) = c[static_cast<size_t>(j)];
    return from_state_space(std::move(A), std::move(B), std::move(C), D);
}

StateSpaceModel static_gain(double c) {
    StateSpaceModel ss;
    ss.A = Mat(0, 0);
    ss.B = Mat(0, 1);
    ss.C = Mat(1, 0);
    ss.D = c;
    ss.n = 0;
    return ss;
}

namespace {

std::vector<cplx> resolvent_apply_b(const StateSpaceModel& ss, cplx z) {
    CMat m(ss.n, ss.n);
    for (int i = 0; i < ss.n; ++i)
        for (int j = 0; j < ss.n; ++j) m(i, j) = (i == j ? z : cplx{}) - ss.A(i, j);
    std::vector<cplx> rhs(static_cast<size_t>(ss.n));
    for (int i = 0; i < ss.n; ++i) rhs[static_cast<size_t>(i)] = ss.B(i, 0);
    try {
        return lu_solve(std::move(m), std::move(rhs));
    } catch (const std::runtime_error&) {
        throw std::runtime_error("pole on evaluation point");
    }
}

}  // namespace

cplx eval_transfer(const StateSpaceModel& ss, cplx z) {
    if (ss.n == 0) return cplx{ss.D, 0.0};
    const std::vector<cplx> x = resolvent_apply_b(ss, z);
    cplx g{ss.D, 0.0};
    for (int j = 0; j < ss.n; ++j) g += ss.C(0, j) * x[static_cast<size_t>(j)];
    return g;
}

cplx eval_transfer_derivative(const StateSpaceModel& ss, cplx z) {
    if (ss.n == 0) return cplx{};
    const std::vector<cplx> x = resolvent_apply_b(ss, z);
    CMat m(ss.n, ss.n);
    for (int i = 0; i < ss.n; ++i)
        for (int j = 0; j < ss.n; ++j) m(i, j) = (i == j ? z : cplx{}) - ss.A(i, j);
    std::vector<cplx> y;
    try {
        y = lu_solve(std::move(m), x);
    } catch (const std::runtime_error&) {
        throw std::runtime_error("pole on evaluation point");
    }
    cplx g{};
    for (int j = 0; j < ss.n; ++j) g += ss.C(0, j) * y[static_cast<size_t>(j)];
    return -g;
}

bool is_schur_stable(const StateSpaceModel& ss) {
    if (ss.n == 0) return true;
    return spectral_radius(ss.A) < 1.0 - 1e-9;
}

void require_schur_stable(const StateSpaceModel& ss) {
    if (!is_schur_stable(ss)) throw std::runtime_error("plant not Schur-stable");
}

namespace {

double eval_real_axis(const StateSpaceModel& ss, double s) {
    if (ss.n == 0) return ss.D;
    Mat m(ss.n, ss.n);
    for (int i = 0; i < ss.n; ++i)
        for (int j = 0; j < ss.n; ++j) m(i, j) = (i == j ? s : 0.0) - ss.A(i, j);
    std::vector<double> rhs(static_cast<size_t>(ss.n));
    for (int i = 0; i < ss.n; ++i) rhs[static_cast<size_t>(i)] = ss.B(i, 0);
    std::vector<double> x = lu_solve(std::move(m), std::move(rhs));
    double g = ss.D;
    for (int j = 0; j < ss.n; ++j) g += ss.C(0, j) * x[static_cast<size_t>(j)];
    return g;
}

}  // namespace

double nyquist_value(const StateSpaceModel& ss, int grid_size) {
    require_schur_stable(ss);
    std::vector<double> crossings;
    // z = +1 and z = -1 lie on the real axis exactly
    crossings.push_back(eval_real_axis(ss, 1.0));
    crossings.push_back(eval_real_axis(ss, -1.0));

    const double pi = std::acos(-1.0);
    std::vector<double> im(static_cast<size_t>(grid_size) + 1);
    for (int k = 0; k <= grid_size; ++k) {
        const double wk = pi * k / grid_size;
        im[static_cast<size_t>(k)] = eval_transfer(ss, cplx{std::cos(wk), std::sin(wk)}).imag();
    }
    for (int k = 1; k + 2 <= grid_size; ++k) {
        const double il = im[static_cast<size_t>(k)];
        const double ir = im[static_cast<size_t>(k) + 1];
        if (il == 0.0) {
            const double wk = pi * k / grid_size;
            crossings.push_back(eval_transfer(ss, cplx{std::cos(wk), std::sin(wk)}).real());
            continue;
        }
        if (il * ir >= 0.0) continue;
        double lo = pi * k / grid_size, hi = pi * (k + 1) / grid_size;
        double flo = il;
        while (hi - lo > 1e-6) {
            const double mid = 0.5 * (lo + hi);
            const double fm = eval_transfer(ss, cplx{std::cos(mid), std::sin(mid)}).imag();
            if (flo * fm <= 0.0) hi = mid;
            else { lo = mid; flo = fm; }
        }
        const double wm = 0.5 * (lo + hi);
        crossings.push_back(eval_transfer(ss, cplx{std::cos(wm), std::sin(wm)}).real());
    }

    double worst = 0.0;
    for (double g : crossings) worst = std::max(worst, g);
    if (worst <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / worst;
}

LiftedStateSpace kron_lift(const StateSpaceModel& ss, int d) {
    if (d < 1) throw std::invalid_argument("lift dimension must be >= 1");
    return LiftedStateSpace{ss, d};
}

Mat kron_identity(const Mat& m, int d) {
    Mat z(m.rows * d, m.cols * d);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            for (int r = 0; r < d; ++r) z(i * d + r, j * d + r) = m(i, j);
    return z;
}

MimoStateSpace materialize(const LiftedStateSpace& l) {
    MimoStateSpace m;
    m.A = kron_identity(l.base.A, l.d);
    m.B = kron_identity(l.base.B, l.d);
    m.C = kron_identity(l.base.C, l.d);
    Mat dd(1, 1);
    dd(0, 0) = l.base.D;
    m.D = kron_identity(dd, l.d);
    return m;
}

CMat eval_transfer_mimo(const MimoStateSpace& m, cplx z) {
    const int ns = m.A.rows;
    const int d = m.B.cols;
    CMat out(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out(i, j) = m.D(i, j);
    if (ns == 0) return out;
    for (int c = 0; c < d; ++c) {
        CMat res(ns, ns);
        for (int i = 0; i < ns; ++i)
            for (int j = 0; j < ns; ++j) res(i, j) = (i == j ? z : cplx{}) - m.A(i, j);
        std::vector<cplx> rhs(static_cast<size_t>(ns));
        for (int i = 0; i < ns; ++i) rhs[static_cast<size_t>(i)] = m.B(i, c);
        std::vector<cplx> x;
        try {
            x = lu_solve(std::move(res), std::move(rhs));
        } catch (const std::runtime_error&) {
            throw std::runtime_error("pole on evaluation point");
        }
        for (int r = 0; r < d; ++r) {
            cplx s{};
            for (int j = 0; j < ns; ++j) s += m.C(r, j) * x[static_cast<size_t>(j)];
            out(r, c) += s;
        }
    }
    return out;
}

std::vector<double> lifted_step(const LiftedStateSpace& l, Mat& X, const std::vector<double>& y) {
    const StateSpaceModel& ss = l.base;
    const int d = l.d;
    if (X.rows != ss.n || X.cols != d || static_cast<int>(y.size()) != d)
        throw std::invalid_argument("lifted_step: shape mismatch");
    std::vector<double> out(static_cast<size_t>(d));
    for (int r = 0; r < d; ++r) {
        double s = ss.D * y[static_cast<size_t>(r)];
        for (int j = 0; j < ss.n; ++j) s += ss.C(0, j) * X(j, r);
        out[static_cast<size_t>(r)] = s;
    }
    Mat nx(ss.n, d);
    for (int i = 0; i < ss.n; ++i)
        for (int r = 0; r < d; ++r) {
            double s = ss.B(i, 0) * y[static_cast<size_t>(r)];
            for (int j = 0; j < ss.n; ++j) s += ss.A(i, j) * X(j, r);
            nx(i, r) = s;
        }
    X = std::move(nx);
    return out;
}

Mat periodic_initial_state_lifted(const StateSpaceModel& ss,
                                  const std::vector<std::vector<double>>& y_period) {
    const int N = static_cast<int>(y_period.size());
    if (N < 1) throw std::invalid_argument("empty period");
    const int d = static_cast<int>(y_period.front().size());
    if (ss.n == 0) return Mat(0, d);

    for (const cplx& l : eigenvalues(ss.A))
        if (std::abs(std::abs(l) - 1.0) <= 1e-9) throw std::runtime_error("eigenvalue on unit circle");

    // Z = sum_j A^{N-1-j} B y_j^T by Horner's scheme
    Mat Z(ss.n, d);
    for (int j = 0; j < N; ++j) {
        Z = mat_mul(ss.A, Z);
        for (int i = 0; i < ss.n; ++i)
            for (int r = 0; r < d; ++r) Z(i, r) += ss.B(i, 0) * y_period[static_cast<size_t>(j)][static_cast<size_t>(r)];
    }
    Mat an = Mat::identity(ss.n);
    for (int j = 0; j < N; ++j) an = mat_mul(ss.A, an);
    Mat lhs = Mat::identity(ss.n);
    for (size_t i = 0; i < lhs.a.size(); ++i) lhs.a[i] -= an.a[i];

    Mat X0(ss.n, d);
    for (int c = 0; c < d; ++c) {
        std::vector<double> col(static_cast<size_t>(ss.n));
        for (int i = 0; i < ss.n; ++i) col[static_cast<size_t>(i)] = Z(i, c);
        std::vector<double> sol;
        try {
            sol = lu_solve(lhs, std::move(col));
        } catch (const std::runtime_error&) {
            throw std::runtime_error("eigenvalue on unit circle");
        }
        for (int i = 0; i < ss.n; ++i) X0(i, c) = sol[static_cast<size_t>(i)];
    }
    return X0;
}

std::vector<double> periodic_initial_state(const StateSpaceModel& ss, const Signal& y_period) {
    if (y_period.period < 1) throw std::invalid_argument("signal has no declared period");
    if (y_period.d != 1) throw std::invalid_argument("scalar signal expected");
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<size_t>(y_period.period));
    for (int k = 0; k < y_period.period; ++k) rows.push_back(y_period.at(k));
    Mat X0 = periodic_initial_state_lifted(ss, rows);
    std::vector<double> xi(static_cast<size_t>(ss.n));
    for (int i = 0; i < ss.n; ++i) xi[static_cast<size_t>(i)] = X0(i, 0);
    return xi;
}

}  // namespace ozf
