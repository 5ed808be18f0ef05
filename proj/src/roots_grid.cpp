#include "ozf/roots_grid.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace ozf {

RootsGrid make_roots_grid(int N) {
    if (N < 1) throw std::invalid_argument("grid size must be positive");
    RootsGrid g;
    g.N = N;
    g.w.assign(static_cast<size_t>(N), cplx{});
    const double pi = std::acos(-1.0);
    g.w[0] = cplx{1.0, 0.0};
    for (int m = 1; 2 * m <= N; ++m)
        g.w[static_cast<size_t>(m)] = cplx{std::cos(2.0 * pi * m / N), std::sin(2.0 * pi * m / N)};
    if (N % 2 == 0) g.w[static_cast<size_t>(N / 2)] = cplx{-1.0, 0.0};
    if (N % 4 == 0) g.w[static_cast<size_t>(N / 4)] = cplx{0.0, 1.0};
    for (int m = N / 2 + 1; m < N; ++m) g.w[static_cast<size_t>(m)] = std::conj(g.w[static_cast<size_t>(N - m)]);
    return g;
}

cplx RootsGrid::power(int j, int l) const {
    std::int64_t m = (static_cast<std::int64_t>(j) * l) % N;
    if (m < 0) m += N;
    return w[static_cast<size_t>(m)];
}

CMat RootsGrid::dft() const {
    CMat v(N, N);
    const double s = 1.0 / std::sqrt(static_cast<double>(N));
    for (int j = 0; j < N; ++j)
        for (int l = 0; l < N; ++l) v(j, l) = power(j, l) * s;
    return v;
}

Mat CirculantMatrix::dense() const {
    Mat m(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m(i, j) = symbol[static_cast<size_t>(((i - j) % N + N) % N)];
    return m;
}

std::vector<double> CirculantMatrix::apply(const std::vector<double>& v) const {
    if (static_cast<int>(v.size()) != N) throw std::invalid_argument("circulant apply: size mismatch");
    std::vector<double> r(static_cast<size_t>(N), 0.0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            r[static_cast<size_t>(i)] += symbol[static_cast<size_t>(((i - j) % N + N) % N)] * v[static_cast<size_t>(j)];
    return r;
}

CirculantMatrix circulant_from_symbol(std::vector<double> symbol) {
    CirculantMatrix c;
    c.N = static_cast<int>(symbol.size());
    c.symbol = std::move(symbol);
    return c;
}

CirculantMatrix circulant_from_diagonal(const RootsGrid& grid, const std::vector<cplx>& q) {
    const int N = grid.N;
    if (static_cast<int>(q.size()) != N) throw std::invalid_argument("diagonal size mismatch");
    // first column of V diag(q) V*: symbol_k = (1/N) sum_j w^{jk} q_j
    CirculantMatrix c;
    c.N = N;
    c.symbol.assign(static_cast<size_t>(N), 0.0);
    for (int k = 0; k < N; ++k) {
        cplx s{};
        for (int j = 0; j < N; ++j) s += grid.power(j, k) * q[static_cast<size_t>(j)];
        s /= static_cast<double>(N);
        if (std::abs(s.imag()) > 1e-10) throw std::runtime_error("symmetry violation");
        c.symbol[static_cast<size_t>(k)] = s.real();
    }
    return c;
}

std::vector<cplx> symmetric_grid_eval(const StateSpaceModel& ss, const RootsGrid& grid,
                                      double shift) {
    const int N = grid.N;
    std::vector<cplx> q(static_cast<size_t>(N));
    for (int j = 0; 2 * j <= N; ++j) q[static_cast<size_t>(j)] = eval_transfer(ss, grid.node(j)) - shift;
    for (int j = N / 2 + 1; j < N; ++j) q[static_cast<size_t>(j)] = std::conj(q[static_cast<size_t>(N - j)]);
    return q;
}

CirculantMatrix build_circulant_T(const StateSpaceModel& ss, const RootsGrid& grid, double shift) {
    require_schur_stable(ss);
    return circulant_from_diagonal(grid, symmetric_grid_eval(ss, grid, shift));
}

}  // namespace ozf
