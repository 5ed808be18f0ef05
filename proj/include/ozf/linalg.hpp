#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ozf {

using cplx = std::complex<double>;

/// Dense row-major matrix over double or cplx. Sizes in this library stay
/// small (state dimension <= 64, grids handled vector-wise), so plain
/// O(n^3) kernels are used throughout.
template <typename T>
struct Dense {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    Dense() = default;
    Dense(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T{}) {}

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Dense identity(int n) {
        Dense m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }
};

using Mat = Dense<double>;
using CMat = Dense<cplx>;

Mat mat_mul(const Mat& x, const Mat& y);
CMat cmat_mul(const CMat& x, const CMat& y);
Mat mat_transpose(const Mat& x);
CMat cmat_adjoint(const CMat& x);
CMat to_complex(const Mat& x);

std::vector<double> mat_vec(const Mat& m, const std::vector<double>& v);
std::vector<cplx> cmat_vec(const CMat& m, const std::vector<cplx>& v);

double frob_norm(const Mat& m);
double vec_norm(const std::vector<double>& v);
double dot(const std::vector<double>& x, const std::vector<double>& y);

/// Solves a x = b by LU with partial pivoting. Throws std::runtime_error
/// ("singular linear system") when the pivot falls below a relative floor.
std::vector<double> lu_solve(Mat a, std::vector<double> b);
std::vector<cplx> lu_solve(CMat a, std::vector<cplx> b);

/// Eigenvalues of a general real square matrix via complex Hessenberg
/// reduction followed by explicitly shifted QR with deflation.
std::vector<cplx> eigenvalues(const Mat& a);

double spectral_radius(const Mat& a);

struct SymEig {
    std::vector<double> values;  // descending
    Mat vectors;                 // columns, orthonormal, sign-normalized
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Eigenvectors are
/// normalized so the entry of largest magnitude is positive, which keeps
/// factorizations reproducible run to run.
SymEig sym_eig(Mat a);

/// Minimum-norm solution of s x = b for symmetric positive semidefinite s,
/// dropping eigenvalues below rel_tol * max eigenvalue.
std::vector<double> sym_pinv_solve(const Mat& s, const std::vector<double>& b,
                                   double rel_tol = 1e-12);

/// Eigenvalues of a complex Hermitian matrix through the symmetric real
/// embedding [[re, -im], [im, re]]; each eigenvalue appears twice in the
/// embedding, so the distinct ascending list is returned.
std::vector<double> hermitian_eigenvalues(const CMat& h);

}  // namespace ozf
