#include "ozf/pd_harmonics.hpp"

#include <cmath>
#include <stdexcept>

namespace ozf {

PdReport is_pd_sequence(const std::vector<cplx>& c) {
    const int N = static_cast<int>(c.size());
    if (N < 1) throw std::invalid_argument("empty sequence");
    RootsGrid g = make_roots_grid(N);
    PdReport r;
    r.min_dft = 1e300;
    r.max_dft = -1e300;
    for (int l = 0; l < N; ++l) {
        cplx s{};
        for (int j = 0; j < N; ++j) s += c[static_cast<size_t>(j)] * g.power(j, -l);
        r.min_dft = std::min(r.min_dft, s.real());
        r.max_dft = std::max(r.max_dft, s.real());
        r.worst_imag = std::max(r.worst_imag, std::abs(s.imag()));
    }
    r.ok = r.worst_imag <= 1e-10 && r.min_dft >= -1e-10 * std::max(1.0, r.max_dft);
    return r;
}

cplx pwl_eval_arc(const PwlCircleFunction& f, int j, double s) {
    const int N = f.N;
    const cplx a = f.values[static_cast<size_t>(((j % N) + N) % N)];
    const cplx b = f.values[static_cast<size_t>((((j + 1) % N) + N) % N)];
    return (1.0 - s) * a + s * b;
}

cplx pwl_eval_angle(const PwlCircleFunction& f, double omega) {
    const int N = f.N;
    const double pi = std::acos(-1.0);
    double u = omega / (2.0 * pi / N);
    double whole = std::floor(u);
    double s = u - whole;
    long j = static_cast<long>(whole) % N;
    if (j < 0) j += N;
    return pwl_eval_arc(f, static_cast<int>(j), s);
}

cplx pwl_eval(const PwlCircleFunction& f, cplx z) {
    if (std::abs(std::abs(z) - 1.0) > 1e-9) throw std::invalid_argument("point not on unit circle");
    double w = std::atan2(z.imag(), z.real());
    if (w < 0.0) w += 2.0 * std::acos(-1.0);
    return pwl_eval_angle(f, w);
}

std::vector<cplx> pwl_fourier_coefficients(const PwlCircleFunction& f, int K) {
    if (K < 0) throw std::invalid_argument("negative truncation");
    const int N = f.N;
    const double pi = std::acos(-1.0);
    const double delta = 2.0 * pi / N;
    RootsGrid g = make_roots_grid(N);
    std::vector<cplx> h(static_cast<size_t>(2 * K) + 1, cplx{});

    for (int k = -K; k <= K; ++k) {
        if (k == 0) {
            cplx s{};
            for (int j = 0; j < N; ++j) s += 0.5 * (f.values[static_cast<size_t>(j)] + f.values[static_cast<size_t>((j + 1) % N)]);
            h[static_cast<size_t>(K)] = s * delta / (2.0 * pi);
            continue;
        }
        // int_0^delta e^{-ik tau} dtau and int_0^delta tau e^{-ik tau} dtau
        const cplx ed = g.power(1, -k);  // e^{-ik delta}, exact at k = 0 mod N
        const cplx ik{0.0, static_cast<double>(k)};
        const cplx i1 = (1.0 - ed) / ik;
        const cplx i2 = -delta * ed / ik - (1.0 - ed) / (static_cast<double>(k) * k);
        cplx s{};
        for (int j = 0; j < N; ++j) {
            const cplx p = f.values[static_cast<size_t>(j)];
            const cplx q = (f.values[static_cast<size_t>((j + 1) % N)] - p) / delta;
            s += g.power(j, -k) * (p * i1 + q * i2);  // e^{-ik a_j} = w^{-jk}
        }
        h[static_cast<size_t>(k + K)] = s / (2.0 * pi);
    }
    return h;
}

std::vector<double> pwl_fourier_real(const PwlCircleFunction& f, int K) {
    std::vector<cplx> h = pwl_fourier_coefficients(f, K);
    std::vector<double> out(h.size());
    for (size_t i = 0; i < h.size(); ++i) {
        if (std::abs(h[i].imag()) > 1e-10) throw std::runtime_error("symmetry violation");
        out[i] = h[i].real();
    }
    return out;
}

HyperdominanceReport is_doubly_hyperdominant(int kmin, const std::vector<double>& m) {
    HyperdominanceReport r;
    r.worst_offdiag = -1e300;
    double sum = 0.0;
    bool any_off = false;
    for (size_t i = 0; i < m.size(); ++i) {
        const int k = kmin + static_cast<int>(i);
        sum += m[i];
        if (k != 0) {
            any_off = true;
            r.worst_offdiag = std::max(r.worst_offdiag, m[i]);
        }
    }
    if (!any_off) r.worst_offdiag = 0.0;
    r.row_sum_slack = sum;
    r.is_dhd = r.worst_offdiag <= 1e-12 && sum >= -1e-12;
    return r;
}

}  // namespace ozf
