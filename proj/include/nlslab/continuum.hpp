// continuum.hpp -- maps between lattice functions and functions on R^d:
// piecewise-constant continuum images, the multilinear interpolant f^c, and
// the zero extension of torus fields to Z^d windows.

#pragma once

#include "nlslab/grid.hpp"
#include "nlslab/observables.hpp"

namespace nlslab {

// Piecewise-constant continuum image v~(y) = v(floor(y/h)) of a window field.
struct ContinuumImage {
  WindowField f;
  cplx operator()(std::span<const double> y) const;
  // ||v~||_{L^q(R^d)} = h^{d/q} ||v||_q exactly (q = inf -> max over cells).
  double lq_norm(double q) const;
};

ContinuumImage continuum_image(const WindowField& f);
ContinuumImage continuum_image(const Field& f);  // extend by zero first

// Multilinear interpolant f^c(hx + ht) = sum_{s in {0,1}^d} f(x+s) prod t_i^{s_i}(1-t_i)^{1-s_i}.
struct MultilinearInterpolant {
  WindowField f;
  cplx value(std::span<const double> y) const;
  cplx partial(int axis, std::span<const double> y) const;

  // integral of |f^c|^2 over R^d (per-cell tensor Gauss quadrature).
  double mass(int gauss_pts = 4) const;
  // (1/2) int |grad f^c|^2  -  (1/(p+1)) int |f^c|^{p+1}.
  double energy(double p, int gauss_pts = 4) const;
  double gradient_term(int gauss_pts = 4) const;
  double nonlinear_term(double p, int gauss_pts = 4) const;
};

MultilinearInterpolant interpolate_multilinear(const WindowField& f);

// f^e: equal to f on [0,n)^d, zero outside; the window carries one ring of
// zero padding so all bonds to the complement are represented.
WindowField extend(const Field& f);

// Mass/gradient/nonlinear of a window field as a function on Z^d
// (bonds from support to the zero exterior included).
ObservableSet window_observables(const WindowField& f, double p);

double window_lq_norm(const WindowField& f, double q);      // plain l^q
double window_lqh_norm(const WindowField& f, double q);     // h^{d/q} weighted

}  // namespace nlslab
