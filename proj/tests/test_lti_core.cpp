#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ozf/roots_grid.hpp"
#include "ozf/signal.hpp"
#include "ozf/state_space.hpp"

using namespace ozf;

namespace {

// independent oracle: evaluate num/den directly as polynomials in z
cplx rational_eval(const std::vector<double>& num, const std::vector<double>& den, cplx z) {
    cplx n{}, d{};
    for (double c : num) n = n * z + c;
    for (double c : den) d = d * z + c;
    return n / d;
}

const std::vector<double> kExNum = {1.1, 0.6};
const std::vector<double> kExDen = {1.0, 1.8, 0.9};

StateSpaceModel example_plant() { return from_transfer(kExNum, kExDen); }

StateSpaceModel random_stable_plant(std::mt19937& rng, int nmax = 6) {
    std::uniform_int_distribution<int> nd(1, nmax);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = nd(rng);
    Mat A(n, n), B(n, 1), C(1, n);
    for (double& v : A.a) v = u(rng);
    for (double& v : B.a) v = u(rng);
    for (double& v : C.a) v = u(rng);
    const double r = spectral_radius(A);
    const double target = 0.2 + 0.37 * (u(rng) + 1.0);  // in (0.2, 0.94)
    if (r > 1e-12) {
        const double f = target / r;
        for (double& v : A.a) v *= f;
    }
    return from_state_space(std::move(A), std::move(B), std::move(C), u(rng));
}

}  // namespace

TEST_CASE("transfer evaluation matches the rational oracle") {
    StateSpaceModel ss = example_plant();
    CHECK(eval_transfer(ss, cplx{1.0, 0.0}).real() == doctest::Approx(1.7 / 3.7).epsilon(1e-12));
    CHECK(eval_transfer(ss, cplx{-1.0, 0.0}).real() == doctest::Approx(-5.0).epsilon(1e-12));
    CHECK(eval_transfer(static_gain(0.7), cplx{0.3, std::sqrt(1 - 0.09)}) == cplx{0.7, 0.0});

    std::mt19937 rng(11u);
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::acos(-1.0));
    for (int t = 0; t < 100; ++t) {
        const double w = u(rng);
        const cplx z{std::cos(w), std::sin(w)};
        const cplx got = eval_transfer(ss, z);
        const cplx want = rational_eval(kExNum, kExDen, z);
        CHECK(std::abs(got - want) < 1e-12);
        // conjugate symmetry
        CHECK(std::abs(eval_transfer(ss, std::conj(z)) - std::conj(got)) < 1e-14);
    }
}

TEST_CASE("transfer derivative matches finite differences") {
    StateSpaceModel ss = example_plant();
    const cplx z{std::cos(0.9), std::sin(0.9)};
    const double h = 1e-6;
    const cplx fd = (eval_transfer(ss, z * std::polar(1.0, h)) -
                     eval_transfer(ss, z * std::polar(1.0, -h))) /
                    (2.0 * h * cplx{0.0, 1.0} * z);
    CHECK(std::abs(eval_transfer_derivative(ss, z) - fd) < 1e-6);
}

TEST_CASE("transfer ingestion handles direct terms and degenerate numerators") {
    // (2z^2 + z) / (z^2 - 0.25): D = 2 from matching degrees
    StateSpaceModel ss = from_transfer({2.0, 1.0, 0.0}, {1.0, 0.0, -0.25});
    const cplx z{0.6, 0.8};
    CHECK(std::abs(eval_transfer(ss, z) - rational_eval({2, 1, 0}, {1, 0, -0.25}, z)) < 1e-13);
    CHECK(ss.D == doctest::Approx(2.0));
    CHECK_THROWS(from_transfer({1.0, 0.0, 0.0, 0.0}, {1.0, 0.5}));
}

TEST_CASE("pole evaluation raises the dedicated error") {
    // pole at z = 0.5
    StateSpaceModel ss = from_transfer({1.0}, {1.0, -0.5});
    CHECK_THROWS_WITH(eval_transfer(ss, cplx{0.5, 0.0}), "pole on evaluation point");
}

TEST_CASE("schur stability check") {
    CHECK(is_schur_stable(example_plant()));  // poles at |z| = sqrt(0.9)
    StateSpaceModel bad = from_transfer({1.0}, {1.0, -1.5});
    CHECK_FALSE(is_schur_stable(bad));
    CHECK_THROWS_WITH(require_schur_stable(bad), "plant not Schur-stable");
}

TEST_CASE("nyquist value of the example plant") {
    const double k = nyquist_value(example_plant());
    CHECK(k == doctest::Approx(2.17).epsilon(0.01));
    // the binding crossing is at z = 1, so the exact value is 1/G(1)
    CHECK(k == doctest::Approx(3.7 / 1.7).epsilon(1e-9));
}

TEST_CASE("nyquist value degenerate cases") {
    CHECK(std::isinf(nyquist_value(static_gain(-1.0))));
    CHECK(nyquist_value(static_gain(1.0)) == doctest::Approx(1.0));
    // G1 from the second worked plant: -z/(z^2 - 1.8z + 0.81)
    StateSpaceModel g1 = from_transfer({-1.0, 0.0}, {1.0, -1.8, 0.81});
    const double k1 = nyquist_value(g1);
    // crossing at z = -1: G1(-1) = 1/3.61
    CHECK(k1 == doctest::Approx(3.61).epsilon(1e-6));
}

TEST_CASE("roots grid is exactly conjugate symmetric and unitary") {
    for (int N = 1; N <= 32; ++N) {
        RootsGrid g = make_roots_grid(N);
        for (int m = 1; m < N; ++m) {
            CHECK(g.w[static_cast<size_t>(m)].real() == g.w[static_cast<size_t>(N - m)].real());
            CHECK(g.w[static_cast<size_t>(m)].imag() == -g.w[static_cast<size_t>(N - m)].imag());
        }
        CMat v = g.dft();
        CMat vvh = cmat_mul(v, cmat_adjoint(v));
        double err = 0.0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                err = std::max(err, std::abs(vvh(i, j) - (i == j ? cplx{1, 0} : cplx{})));
        CHECK(err <= 1e-12);
    }
}

TEST_CASE("circulant diagonalization identity") {
    std::mt19937 rng(5u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int N : {1, 2, 3, 5, 8, 13, 32}) {
        std::vector<double> sym(static_cast<size_t>(N));
        for (double& s : sym) s = u(rng);
        CirculantMatrix c = circulant_from_symbol(sym);
        RootsGrid g = make_roots_grid(N);
        CMat v = g.dft();
        // eigenvalues sqrt(N) * (V^* symbol)
        std::vector<cplx> lam(static_cast<size_t>(N));
        for (int l = 0; l < N; ++l) {
            cplx s{};
            for (int k = 0; k < N; ++k) s += std::conj(v(k, l)) * sym[static_cast<size_t>(k)];
            lam[static_cast<size_t>(l)] = s * std::sqrt(static_cast<double>(N));
        }
        CMat diag(N, N);
        for (int l = 0; l < N; ++l) diag(l, l) = lam[static_cast<size_t>(l)];
        CMat rec = cmat_mul(cmat_mul(v, diag), cmat_adjoint(v));
        Mat dense = c.dense();
        double err = 0.0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) err = std::max(err, std::abs(rec(i, j) - cplx{dense(i, j), 0.0}));
        CHECK(err <= 1e-10);

        // apply() agrees with the dense product
        std::vector<double> x(static_cast<size_t>(N));
        for (double& s : x) s = u(rng);
        std::vector<double> want = mat_vec(dense, x);
        std::vector<double> got = c.apply(x);
        for (int i = 0; i < N; ++i) CHECK(got[static_cast<size_t>(i)] == doctest::Approx(want[static_cast<size_t>(i)]).epsilon(1e-12));
    }
}

TEST_CASE("plant-induced circulant is real and consistent") {
    RootsGrid g5 = make_roots_grid(5);
    StateSpaceModel ss = example_plant();
    CirculantMatrix t = build_circulant_T(ss, g5, 0.5);
    // row sums equal the symbol at frequency zero: G(1) - 0.5
    const double want = 1.7 / 3.7 - 0.5;
    Mat d = t.dense();
    for (int i = 0; i < 5; ++i) {
        double rs = 0.0;
        for (int j = 0; j < 5; ++j) rs += d(i, j);
        CHECK(rs == doctest::Approx(want).epsilon(1e-10));
    }

    CirculantMatrix tc = build_circulant_T(static_gain(0.37), make_roots_grid(7), 0.0);
    for (int k = 0; k < 7; ++k)
        CHECK(tc.symbol[static_cast<size_t>(k)] == doctest::Approx(k == 0 ? 0.37 : 0.0).epsilon(1e-14));

    CirculantMatrix t1 = build_circulant_T(ss, make_roots_grid(1), 0.0);
    CHECK(t1.symbol[0] == doctest::Approx(1.7 / 3.7).epsilon(1e-12));
}

TEST_CASE("periodic initial state fixed points") {
    // A = 0: xi0 equals the last input sample
    StateSpaceModel delay = from_state_space(Mat(1, 1), [] { Mat b(1, 1); b(0, 0) = 1.0; return b; }(),
                                             [] { Mat c(1, 1); c(0, 0) = 1.0; return c; }(), 0.0);
    Signal y3 = Signal::scalar_periodic({0.3, -0.7, 2.0});
    std::vector<double> xi = periodic_initial_state(delay, y3);
    CHECK(xi[0] == doctest::Approx(2.0));

    // scalar a = 0.5: geometric series 1/(1 - 0.5) = 2
    Mat a(1, 1);
    a(0, 0) = 0.5;
    StateSpaceModel lag = from_state_space(a, [] { Mat b(1, 1); b(0, 0) = 1.0; return b; }(),
                                           [] { Mat c(1, 1); c(0, 0) = 1.0; return c; }(), 0.0);
    std::vector<double> xi1 = periodic_initial_state(lag, Signal::scalar_periodic({1.0}));
    CHECK(xi1[0] == doctest::Approx(2.0).epsilon(1e-12));

    std::vector<double> xi0 = periodic_initial_state(lag, Signal::scalar_periodic({0.0, 0.0}));
    CHECK(xi0[0] == doctest::Approx(0.0));

    Mat marg(1, 1);
    marg(0, 0) = 1.0;
    StateSpaceModel unit = from_state_space(marg, [] { Mat b(1, 1); b(0, 0) = 1.0; return b; }(),
                                            [] { Mat c(1, 1); c(0, 0) = 1.0; return c; }(), 0.0);
    CHECK_THROWS_WITH(periodic_initial_state(unit, Signal::scalar_periodic({1.0})),
                      "eigenvalue on unit circle");
}

TEST_CASE("periodic fixed point property over random plants") {
    std::mt19937 rng(23u);
    std::uniform_int_distribution<int> nd(1, 8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        StateSpaceModel ss = random_stable_plant(rng);
        const int N = nd(rng);
        std::vector<double> y(static_cast<size_t>(N));
        for (double& v : y) v = u(rng);
        Signal sig = Signal::scalar_periodic(y);
        std::vector<double> xi = periodic_initial_state(ss, sig);
        // propagate one period
        Mat X(ss.n, 1);
        for (int i = 0; i < ss.n; ++i) X(i, 0) = xi[static_cast<size_t>(i)];
        LiftedStateSpace l = kron_lift(ss, 1);
        for (int k = 0; k < N; ++k) lifted_step(l, X, sig.at(k));
        double err = 0.0;
        for (int i = 0; i < ss.n; ++i) err = std::max(err, std::abs(X(i, 0) - xi[static_cast<size_t>(i)]));
        CHECK(err <= 1e-9 * (1.0 + vec_norm(xi)));
    }
}

TEST_CASE("kronecker lift matches its dense materialization") {
    StateSpaceModel ss = example_plant();
    LiftedStateSpace l = kron_lift(ss, 2);
    CMat g1 = eval_transfer_mimo(materialize(l), cplx{1.0, 0.0});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(std::abs(g1(i, j) - (i == j ? cplx{1.7 / 3.7, 0.0} : cplx{})) < 1e-12);

    MimoStateSpace st = materialize(kron_lift(static_gain(0.5), 3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(st.D(i, j) == doctest::Approx(i == j ? 0.5 : 0.0));

    // factored stepping equals dense stepping
    std::mt19937 rng(31u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int d = 3;
    LiftedStateSpace l3 = kron_lift(ss, d);
    MimoStateSpace dense = materialize(l3);
    Mat X(ss.n, d);
    for (double& v : X.a) v = u(rng);
    // row-major flatten of X matches the Kronecker state ordering
    std::vector<double> xflat(X.a);
    for (int step = 0; step < 10; ++step) {
        std::vector<double> y(static_cast<size_t>(d));
        for (double& v : y) v = u(rng);
        std::vector<double> out = lifted_step(l3, X, y);
        std::vector<double> dout = mat_vec(dense.C, xflat);
        std::vector<double> du = mat_vec(dense.D, y);
        std::vector<double> bx = mat_vec(dense.A, xflat);
        std::vector<double> bu = mat_vec(dense.B, y);
        for (int r = 0; r < d; ++r) CHECK(out[static_cast<size_t>(r)] == doctest::Approx(dout[static_cast<size_t>(r)] + du[static_cast<size_t>(r)]).epsilon(1e-12));
        for (size_t i = 0; i < xflat.size(); ++i) xflat[i] = bx[i] + bu[i];
        for (size_t i = 0; i < xflat.size(); ++i) CHECK(X.a[i] == doctest::Approx(xflat[i]).epsilon(1e-12));
    }

    // lifted periodic initial state is periodic
    std::vector<std::vector<double>> yper(4, std::vector<double>(static_cast<size_t>(d)));
    for (auto& row : yper)
        for (double& v : row) v = u(rng);
    Mat X0 = periodic_initial_state_lifted(ss, yper);
    Mat Xp = X0;
    for (int k = 0; k < 4; ++k) lifted_step(l3, Xp, yper[static_cast<size_t>(k)]);
    double err = 0.0;
    for (size_t i = 0; i < Xp.a.size(); ++i) err = std::max(err, std::abs(Xp.a[i] - X0.a[i]));
    CHECK(err <= 1e-10);
}

TEST_CASE("signal power") {
    Signal c3 = Signal::scalar_periodic({3.0});
    CHECK(signal_power(c3, 7) == doctest::Approx(3.0));
    Signal z = Signal::scalar_periodic({0.0, 0.0});
    CHECK(signal_power(z, 4) == doctest::Approx(0.0));
    Signal alt = Signal::scalar_periodic({1.0, -1.0});
    CHECK(signal_power(alt, 4) == doctest::Approx(1.0));
    // exactness across whole periods
    Signal s = Signal::scalar_periodic({0.4, -1.2, 0.9});
    const double p1 = signal_power(s, 3);
    for (int m : {2, 5, 11}) CHECK(std::abs(signal_power(s, 3 * m) - p1) <= 1e-12);
    // finite (aperiodic) signal is zero-extended
    Signal fin;
    fin.d = 1;
    fin.samples = {{2.0}};
    CHECK(signal_power(fin, 4) == doctest::Approx(1.0));
}
