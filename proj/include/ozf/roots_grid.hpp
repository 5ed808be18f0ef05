#pragma once

#include <vector>

#include "ozf/linalg.hpp"
#include "ozf/state_space.hpp"

namespace ozf {

/// N-th roots of unity with an exactly conjugate-symmetric power table:
/// power(j, l) = z_j^l is computed by index reduction (j*l mod N), and the
/// table satisfies w[N-m] == conj(w[m]) bitwise. This makes downstream
/// constructions (LP rows, circulant symbols) symmetric to the last bit.
struct RootsGrid {
    int N = 0;
    std::vector<cplx> w;  // w[m] = exp(2 pi i m / N)

    cplx node(int j) const { return w[static_cast<size_t>(j % N)]; }
    cplx power(int j, int l) const;
    CMat dft() const;  // V with V(j, l) = z_j^l / sqrt(N), unitary
};

RootsGrid make_roots_grid(int N);

/// Real circulant matrix stored by its first column.
struct CirculantMatrix {
    int N = 0;
    std::vector<double> symbol;

    Mat dense() const;
    /// y -> C y.
    std::vector<double> apply(const std::vector<double>& v) const;
};

CirculantMatrix circulant_from_symbol(std::vector<double> symbol);

/// q_j = G(z_j) - shift at the grid nodes, with q_{N-j} := conj(q_j)
/// enforced bitwise so downstream constructions are exactly symmetric.
std::vector<cplx> symmetric_grid_eval(const StateSpaceModel& ss, const RootsGrid& grid,
                                      double shift);

/// T = V diag(q) V* with q_j = G(z_j) - shift. Conjugate symmetry of G makes
/// T real; residual imaginary parts above 1e-10 raise "symmetry violation".
CirculantMatrix build_circulant_T(const StateSpaceModel& ss, const RootsGrid& grid, double shift);

/// Circulant with the given diagonal q in the V basis (q must be
/// conjugate-symmetric); used where q is already available.
CirculantMatrix circulant_from_diagonal(const RootsGrid& grid, const std::vector<cplx>& q);

}  // namespace ozf
