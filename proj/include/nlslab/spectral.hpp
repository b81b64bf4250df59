// spectral.hpp -- exact diagonalization of the torus Laplacian and the
// Fourier multipliers built on it.
//
// The transform pair matches the eigenbasis rho_y(x) = n^{-d/2} e^{2 pi i x.y/n}
// of Gamma = -h^2 Delta: to_fourier(f)(y) = (R* f)(y), so that
//   sum_y |coef_y|^2      = sum_x |f(x)|^2            (Parseval)
//   sum_y lambda_y |c_y|^2 = sum over bonds |f(x)-f(y)|^2.

#pragma once

#include "nlslab/grid.hpp"

namespace nlslab {

struct SpectralBasis {
  GridSpec spec;
  std::vector<double> eigenvalues;  // lambda_y = 4 sum_i sin^2(pi y_i / n), site-indexed
};

SpectralBasis eigenvalues(const GridSpec& spec);

std::vector<cplx> to_fourier(const Field& f);
Field from_fourier(const GridSpec& spec, std::span<const cplx> coef);

// Delta v(x) = h^{-2} sum_{y ~ x} (v(y) - v(x)), computed by the stencil.
Field apply_laplacian(const Field& f);

// Exact flow of i u_t = -Delta u: multiplier e^{-i lambda_y t / h^2}.
Field linear_propagator(const Field& f, double t);

// (omega I - Delta)^{-1} u via the multiplier 1/(omega + lambda_y/h^2); omega > 0.
Field solve_helmholtz(const Field& u, double omega);

}  // namespace nlslab
