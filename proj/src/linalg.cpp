#include "ozf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ozf {

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const double xik = x(i, k);
            if (xik == 0.0) continue;
            for (int j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

CMat cmat_mul(const CMat& x, const CMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("cmat_mul: shape mismatch");
    CMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const cplx xik = x(i, k);
            if (xik == cplx{}) continue;
            for (int j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

Mat mat_transpose(const Mat& x) {
    Mat z(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) z(j, i) = x(i, j);
    return z;
}

CMat cmat_adjoint(const CMat& x) {
    CMat z(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) z(j, i) = std::conj(x(i, j));
    return z;
}

CMat to_complex(const Mat& x) {
    CMat z(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i];
    return z;
}

std::vector<double> mat_vec(const Mat& m, const std::vector<double>& v) {
    if (m.cols != static_cast<int>(v.size())) throw std::invalid_argument("mat_vec: shape mismatch");
    std::vector<double> r(m.rows, 0.0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i] += m(i, j) * v[j];
    return r;
}

std::vector<cplx> cmat_vec(const CMat& m, const std::vector<cplx>& v) {
    if (m.cols != static_cast<int>(v.size())) throw std::invalid_argument("cmat_vec: shape mismatch");
    std::vector<cplx> r(m.rows, cplx{});
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i] += m(i, j) * v[j];
    return r;
}

double frob_norm(const Mat& m) {
    double s = 0.0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

double vec_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

namespace {

template <typename T>
std::vector<T> lu_solve_impl(Dense<T>& a, std::vector<T>& b) {
    const int n = a.rows;
    if (a.cols != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("lu_solve: shape mismatch");
    double scale = 0.0;
    for (const T& v : a.a) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) scale = 1.0;
    const double floor = 1e-13 * scale;

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double m = std::abs(a(i, k));
            if (m > best) { best = m; piv = i; }
        }
        if (best <= floor) throw std::runtime_error("singular linear system");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(b[k], b[piv]);
        }
        const T d = a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const T f = a(i, k) / d;
            if (f == T{}) continue;
            a(i, k) = f;
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        T s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a(i, j) * b[j];
        b[i] = s / a(i, i);
    }
    return b;
}

}  // namespace

std::vector<double> lu_solve(Mat a, std::vector<double> b) { return lu_solve_impl(a, b); }
std::vector<cplx> lu_solve(CMat a, std::vector<cplx> b) { return lu_solve_impl(a, b); }

namespace {

// Unitary similarity to upper Hessenberg form by complex Householder
// reflections; only the reduced matrix is needed by the QR iteration.
void hessenberg_in_place(CMat& h) {
    const int n = h.rows;
    for (int k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm = std::hypot(xnorm, std::abs(h(i, k)));
        if (xnorm == 0.0) continue;
        cplx x0 = h(k + 1, k);
        cplx alpha = (std::abs(x0) == 0.0) ? cplx{-xnorm, 0.0}
                                           : -(x0 / std::abs(x0)) * xnorm;
        std::vector<cplx> v(n, cplx{});
        v[k + 1] = x0 - alpha;
        for (int i = k + 2; i < n; ++i) v[i] = h(i, k);
        double vn = 0.0;
        for (int i = k + 1; i < n; ++i) vn = std::hypot(vn, std::abs(v[i]));
        if (vn == 0.0) continue;
        for (int i = k + 1; i < n; ++i) v[i] /= vn;
        // h <- (I - 2 v v*) h
        for (int j = 0; j < n; ++j) {
            cplx s{};
            for (int i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, j);
            s *= 2.0;
            for (int i = k + 1; i < n; ++i) h(i, j) -= s * v[i];
        }
        // h <- h (I - 2 v v*)
        for (int i = 0; i < n; ++i) {
            cplx s{};
            for (int j = k + 1; j < n; ++j) s += h(i, j) * v[j];
            s *= 2.0;
            for (int j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j]);
        }
        for (int i = k + 2; i < n; ++i) h(i, k) = cplx{};
    }
}

std::pair<cplx, cplx> eig2(cplx a, cplx b, cplx c, cplx d) {
    const cplx tr = a + d;
    const cplx disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
    return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

}  // namespace

std::vector<cplx> eigenvalues(const Mat& a) {
    const int n = a.rows;
    if (a.cols != n) throw std::invalid_argument("eigenvalues: matrix not square");
    if (n == 0) return {};
    if (n == 1) return {cplx{a(0, 0), 0.0}};

    CMat h = to_complex(a);
    hessenberg_in_place(h);

    std::vector<cplx> eig(n);
    int hi = n - 1;
    int stall = 0;
    int guard = 80 * n;
    const double eps = 1e-15;

    while (hi >= 0) {
        if (--guard < 0) throw std::runtime_error("eigenvalue iteration failed");
        if (hi == 0) { eig[0] = h(0, 0); break; }
        // deflate trailing and interior tiny subdiagonals
        int lo = hi;
        while (lo > 0) {
            const double sub = std::abs(h(lo, lo - 1));
            if (sub <= eps * (std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1)))) {
                h(lo, lo - 1) = cplx{};
                break;
            }
            --lo;
        }
        if (lo == hi) { eig[hi] = h(hi, hi); --hi; stall = 0; continue; }
        if (lo == hi - 1) {
            auto [l1, l2] = eig2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
            eig[hi] = l1;
            eig[lo] = l2;
            hi = lo - 1;
            stall = 0;
            continue;
        }

        cplx shift;
        if (++stall % 24 == 0) {
            shift = h(hi, hi) + cplx{1.5 * std::abs(h(hi, hi - 1)), 0.0};
        } else {
            auto [l1, l2] = eig2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            shift = (std::abs(l1 - h(hi, hi)) < std::abs(l2 - h(hi, hi))) ? l1 : l2;
        }

        // explicit shifted QR step on the active block via Givens rotations
        const int m = hi - lo + 1;
        std::vector<double> cs(m - 1);
        std::vector<cplx> sn(m - 1);
        for (int i = lo; i < hi + 1; ++i) h(i, i) -= shift;
        for (int k = lo; k < hi; ++k) {
            const cplx f = h(k, k), g = h(k + 1, k);
            const double r = std::hypot(std::abs(f), std::abs(g));
            double c;
            cplx s;
            if (r == 0.0) { c = 1.0; s = cplx{}; }
            else if (std::abs(f) == 0.0) { c = 0.0; s = std::conj(g) / std::abs(g); }
            else { c = std::abs(f) / r; s = (f / std::abs(f)) * std::conj(g) / r; }
            cs[k - lo] = c;
            sn[k - lo] = s;
            for (int j = k; j <= hi; ++j) {
                const cplx t1 = h(k, j), t2 = h(k + 1, j);
                h(k, j) = c * t1 + s * t2;
                h(k + 1, j) = -std::conj(s) * t1 + c * t2;
            }
            h(k + 1, k) = cplx{};
        }
        for (int k = lo; k < hi; ++k) {
            const double c = cs[k - lo];
            const cplx s = sn[k - lo];
            for (int i = lo; i <= std::min(hi, k + 1); ++i) {
                const cplx t1 = h(i, k), t2 = h(i, k + 1);
                h(i, k) = c * t1 + std::conj(s) * t2;
                h(i, k + 1) = -s * t1 + c * t2;
            }
        }
        for (int i = lo; i < hi + 1; ++i) h(i, i) += shift;
    }
    return eig;
}

double spectral_radius(const Mat& a) {
    double r = 0.0;
    for (const cplx& l : eigenvalues(a)) r = std::max(r, std::abs(l));
    return r;
}

SymEig sym_eig(Mat a) {
    const int n = a.rows;
    if (a.cols != n) throw std::invalid_argument("sym_eig: matrix not square");
    Mat v = Mat::identity(n);
    const double base = frob_norm(a);
    const double tol = 1e-15 * (base == 0.0 ? 1.0 : base);

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::hypot(off, a(p, q));
        if (off <= tol) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= tol / (n * n + 1)) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    const double apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - s * aqj;
                    a(q, j) = s * apj + c * aqj;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = a(i, i);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return d[i] > d[j]; });

    SymEig out;
    out.values.resize(n);
    out.vectors = Mat(n, n);
    for (int c = 0; c < n; ++c) {
        const int src = order[c];
        out.values[c] = d[src];
        int arg = 0;
        double big = 0.0;
        for (int i = 0; i < n; ++i) {
            if (std::abs(v(i, src)) > big) { big = std::abs(v(i, src)); arg = i; }
        }
        const double sign = (v(arg, src) < 0.0) ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i) out.vectors(i, c) = sign * v(i, src);
    }
    return out;
}

std::vector<double> sym_pinv_solve(const Mat& s, const std::vector<double>& b, double rel_tol) {
    const SymEig e = sym_eig(s);
    const int n = s.rows;
    double lmax = 0.0;
    for (double v : e.values) lmax = std::max(lmax, std::abs(v));
    const double cut = rel_tol * (lmax == 0.0 ? 1.0 : lmax);
    std::vector<double> x(n, 0.0);
    for (int c = 0; c < n; ++c) {
        if (std::abs(e.values[c]) <= cut) continue;
        double proj = 0.0;
        for (int i = 0; i < n; ++i) proj += e.vectors(i, c) * b[i];
        proj /= e.values[c];
        for (int i = 0; i < n; ++i) x[i] += proj * e.vectors(i, c);
    }
    return x;
}

std::vector<double> hermitian_eigenvalues(const CMat& h) {
    const int n = h.rows;
    if (h.cols != n) throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
    Mat e(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            e(i, j) = h(i, j).real();
            e(i, j + n) = -h(i, j).imag();
            e(i + n, j) = h(i, j).imag();
            e(i + n, j + n) = h(i, j).real();
        }
    SymEig se = sym_eig(std::move(e));
    // the real embedding doubles each eigenvalue; keep every other entry
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = se.values[2 * i];
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ozf
