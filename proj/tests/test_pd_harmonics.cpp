#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ozf/pd_harmonics.hpp"

using namespace ozf;

namespace {

const double kPi = std::acos(-1.0);

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

// independent closed form: the pwl interpolant is the circular convolution of
// the node Dirac comb with a triangular hat, so its k-th coefficient is the
// node DFT at k mod N scaled by the squared sinc of the hat.
cplx fourier_oracle(const PwlCircleFunction& f, int k) {
    const int N = f.N;
    int l = ((k % N) + N) % N;
    cplx lam{};
    for (int j = 0; j < N; ++j) lam += f.values[static_cast<size_t>(j)] * std::polar(1.0, -2.0 * kPi * j * l / N);
    const double si = sinc(kPi * k / N);
    return lam / static_cast<double>(N) * si * si;
}

// second independent path: composite Simpson per arc
cplx fourier_quadrature(const PwlCircleFunction& f, int k, int m_per_arc) {
    const int N = f.N;
    const double delta = 2.0 * kPi / N;
    cplx total{};
    for (int j = 0; j < N; ++j) {
        const double a = j * delta;
        const double h = delta / m_per_arc;
        auto g = [&](double w) {
            return pwl_eval_arc(f, j, (w - a) / delta) * std::polar(1.0, -k * w);
        };
        cplx s = g(a) + g(a + delta);
        for (int i = 1; i < m_per_arc; ++i) s += (i % 2 ? 4.0 : 2.0) * g(a + i * h);
        total += s * h / 3.0;
    }
    return total / (2.0 * kPi);
}

PwlCircleFunction random_hermitian_pwl(std::mt19937& rng, int N) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    PwlCircleFunction f;
    f.N = N;
    f.values.assign(static_cast<size_t>(N), cplx{});
    f.values[0] = cplx{u(rng) + 1.2, 0.0};
    for (int j = 1; 2 * j <= N; ++j) {
        cplx v{u(rng), 2 * j == N ? 0.0 : u(rng)};
        f.values[static_cast<size_t>(j)] = v;
        f.values[static_cast<size_t>(N - j) % static_cast<size_t>(N)] = std::conj(v);
    }
    return f;
}

PwlCircleFunction random_pd_pwl(std::mt19937& rng, int N) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> dft(static_cast<size_t>(N));
    for (double& v : dft) v = u(rng) < 0.3 ? 0.0 : u(rng);
    PwlCircleFunction f;
    f.N = N;
    f.values.assign(static_cast<size_t>(N), cplx{});
    for (int j = 0; j < N; ++j) {
        cplx s{};
        for (int l = 0; l < N; ++l) s += dft[static_cast<size_t>(l)] * std::polar(1.0, 2.0 * kPi * j * l / N);
        f.values[static_cast<size_t>(j)] = s / static_cast<double>(N);
    }
    return f;
}

}  // namespace

TEST_CASE("pd sequence examples") {
    CHECK(is_pd_sequence({{1, 0}, {1, 0}, {1, 0}}).ok);
    CHECK(is_pd_sequence({{1, 0}, {-1, 0}}).ok);
    PdReport r = is_pd_sequence({{1, 0}, {-1, 0}, {-1, 0}});
    CHECK_FALSE(r.ok);
    CHECK(r.min_dft == doctest::Approx(-1.0));
}

TEST_CASE("pwl evaluation") {
    PwlCircleFunction mid{2, {cplx{1, 0}, cplx{-1, 0}}};
    CHECK(std::abs(pwl_eval_angle(mid, kPi / 2) - cplx{0, 0}) < 1e-14);

    PwlCircleFunction f{4, {cplx{1, 0}, cplx{0, 0}, cplx{-1, 0}, cplx{0, 0}}};
    CHECK(std::abs(pwl_eval(f, std::polar(1.0, kPi / 4)) - cplx{0.5, 0.0}) < 1e-9);
    for (int j = 0; j < 4; ++j) {
        CHECK(std::abs(pwl_eval_arc(f, j, 0.0) - f.values[static_cast<size_t>(j)]) == 0.0);
        CHECK(std::abs(pwl_eval(f, std::polar(1.0, 2.0 * kPi * j / 4)) - f.values[static_cast<size_t>(j)]) < 1e-9);
    }
    CHECK_THROWS(pwl_eval(f, cplx{2.0, 0.0}));
}

TEST_CASE("fourier coefficients of the constant function") {
    PwlCircleFunction one{3, {cplx{1, 0}, cplx{1, 0}, cplx{1, 0}}};
    std::vector<double> h = pwl_fourier_real(one, 5);
    for (int k = -5; k <= 5; ++k)
        CHECK(std::abs(h[static_cast<size_t>(k + 5)] - (k == 0 ? 1.0 : 0.0)) < 1e-14);
}

TEST_CASE("fourier coefficients of the triangle wave") {
    PwlCircleFunction tri{2, {cplx{1, 0}, cplx{-1, 0}}};
    std::vector<double> h = pwl_fourier_real(tri, 2);
    CHECK(std::abs(h[2]) < 1e-14);                                     // h_0
    CHECK(h[3] == doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-12));  // h_1
    CHECK(h[1] == doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-12));  // h_-1
    CHECK(std::abs(h[4]) < 1e-14);                                     // h_2
    CHECK(std::abs(h[0]) < 1e-14);                                     // h_-2

    // partial sums approach f(1) = 1 from below; the window tail is
    // sum of 8/(pi^2 k^2) over odd k past the window, about 4/(pi^2 K)
    std::vector<double> h99 = pwl_fourier_real(tri, 99);
    double sum = 0.0;
    for (double v : h99) sum += v;
    double want = 0.0;
    for (int k = 1; k <= 99; k += 2) want += 8.0 / (kPi * kPi * k * k);
    CHECK(sum == doctest::Approx(want).epsilon(1e-12));
    CHECK(sum == doctest::Approx(1.0).epsilon(5e-3));
    std::vector<double> h999 = pwl_fourier_real(tri, 999);
    double sum999 = 0.0;
    for (double v : h999) sum999 += v;
    CHECK(sum999 == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(sum999 > sum);  // tail strictly shrinks with the window
}

TEST_CASE("fourier coefficients agree with the sinc-squared oracle") {
    std::mt19937 rng(17u);
    std::uniform_int_distribution<int> nd(1, 12);
    for (int t = 0; t < 60; ++t) {
        const int N = nd(rng);
        PwlCircleFunction f = random_hermitian_pwl(rng, N);
        const int K = 3 * N;
        std::vector<cplx> h = pwl_fourier_coefficients(f, K);
        for (int k = -K; k <= K; ++k)
            CHECK(std::abs(h[static_cast<size_t>(k + K)] - fourier_oracle(f, k)) < 1e-12);
    }
}

TEST_CASE("fourier coefficients agree with quadrature on pd node sets") {
    std::mt19937 rng(19u);
    std::uniform_int_distribution<int> nd(1, 8);
    for (int t = 0; t < 50; ++t) {
        const int N = nd(rng);
        PwlCircleFunction f = random_pd_pwl(rng, N);
        const int K = 5;
        std::vector<cplx> h = pwl_fourier_coefficients(f, K);
        for (int k = -K; k <= K; ++k)
            CHECK(std::abs(h[static_cast<size_t>(k + K)] - fourier_quadrature(f, k, 8192)) < 1e-9);
    }
}

TEST_CASE("pd sequence equivalence with interpolant nonnegativity and gram matrices") {
    std::mt19937 rng(29u);
    std::uniform_int_distribution<int> nd(1, 12);
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    int done = 0;
    while (done < 200) {
        const int N = nd(rng);
        PwlCircleFunction f = (done % 2 == 0) ? random_pd_pwl(rng, N) : random_hermitian_pwl(rng, N);
        PdReport rep = is_pd_sequence(f.values);
        if (!rep.ok && rep.min_dft > -1e-7 * std::max(1.0, rep.max_dft)) continue;  // borderline
        ++done;

        const int K = 40 * N;
        std::vector<cplx> h = pwl_fourier_coefficients(f, K);
        double min_h = 1e300;
        for (const cplx& v : h) min_h = std::min(min_h, v.real());

        // gram matrix at the nodes plus 8 random points
        std::vector<cplx> pts;
        for (int j = 0; j < N; ++j) pts.push_back(std::polar(1.0, 2.0 * kPi * j / N));
        for (int i = 0; i < 8; ++i) pts.push_back(std::polar(1.0, u(rng)));
        const int P = static_cast<int>(pts.size());
        CMat gram(P, P);
        for (int a = 0; a < P; ++a)
            for (int b = 0; b < P; ++b) gram(a, b) = pwl_eval(f, pts[static_cast<size_t>(a)] * std::conj(pts[static_cast<size_t>(b)]));
        for (int a = 0; a < P; ++a)
            for (int b = a; b < P; ++b) {
                const cplx avg = 0.5 * (gram(a, b) + std::conj(gram(b, a)));
                gram(a, b) = avg;
                gram(b, a) = std::conj(avg);
            }
        std::vector<double> ev = hermitian_eigenvalues(gram);
        const double scale = std::max(1.0, std::abs(ev.back()));

        if (rep.ok) {
            CHECK(min_h >= -1e-8);
            CHECK(ev.front() >= -1e-8 * scale);
            // boundedness |c_j| <= c_0
            for (const cplx& c : f.values) CHECK(std::abs(c) <= f.values[0].real() + 1e-12);
        } else {
            CHECK(min_h < -1e-9);
            CHECK(ev.front() < -1e-9 * scale);
        }
    }
}

TEST_CASE("doubly hyperdominant checks") {
    HyperdominanceReport id = is_doubly_hyperdominant(0, {1.0});
    CHECK(id.is_dhd);
    CHECK(id.row_sum_slack == doctest::Approx(1.0));

    HyperdominanceReport tight = is_doubly_hyperdominant(-1, {-0.5, 1.0, -0.5});
    CHECK(tight.is_dhd);
    CHECK(tight.row_sum_slack == doctest::Approx(0.0));

    HyperdominanceReport bad = is_doubly_hyperdominant(0, {1.0, 0.2});
    CHECK_FALSE(bad.is_dhd);
    CHECK(bad.worst_offdiag == doctest::Approx(0.2));

    HyperdominanceReport neg = is_doubly_hyperdominant(-1, {-0.6, 1.0, -0.6});
    CHECK_FALSE(neg.is_dhd);
    CHECK(neg.row_sum_slack == doctest::Approx(-0.2));
}

TEST_CASE("truncated multiplier symbols of pd functions are doubly hyperdominant") {
    std::mt19937 rng(37u);
    std::uniform_int_distribution<int> nd(1, 8);
    for (int t = 0; t < 30; ++t) {
        const int N = nd(rng);
        PwlCircleFunction f = random_pd_pwl(rng, N);
        // normalize H(1) = 1
        const double h1 = f.values[0].real();
        if (h1 <= 1e-9) continue;
        for (cplx& v : f.values) v /= h1;
        const int K = 40 * N;
        std::vector<double> h = pwl_fourier_real(f, K);
        std::vector<double> symbol(h.size());
        for (size_t i = 0; i < h.size(); ++i) symbol[i] = -h[i];
        symbol[static_cast<size_t>(K)] += 1.0;  // m = identity - H window
        HyperdominanceReport rep = is_doubly_hyperdominant(-K, symbol);
        CHECK(rep.is_dhd);
        CHECK(rep.row_sum_slack >= -1e-12);
    }
}
