// green.hpp -- the lattice Green's function of (omega I - Delta) on Z^d via
// the random-walk series, kernel bound verification, and the discrete
// Gagliardo-Nirenberg ratio.

#pragma once

#include "nlslab/continuum.hpp"
#include "nlslab/grid.hpp"

namespace nlslab {

// p(x,k) for the simple symmetric walk started at 0, stored for all k <= k_max
// on the l^1 ball |x|_1 <= window_radius.  Outside the ball the walk is
// absorbed; slice_mass[k] tracks the surviving in-window probability, so
// slice_mass[k] = 1 exactly whenever window_radius >= k.
struct WalkTable {
  int d = 1;
  int window_radius = 0;
  int k_max = 0;
  std::vector<int> box_extent;               // (2R+1) per axis
  std::vector<std::vector<double>> slices;   // slices[k][box index], 0 off the l1 ball
  std::vector<double> slice_mass;

  double p(std::span<const int> x, int k) const;
};

WalkTable walk_probabilities(int d, int k_max, int window_radius);

struct GreenKernel {
  double omega = 1.0;
  int d = 1;
  double h = 1.0;
  int window_radius = 0;
  int k_max = 0;
  double r = 0.0;                   // 2d/(2d + omega h^2)
  double truncation_error = 0.0;    // per-point tail bound r^{k_max+1}/(1-r) * h^{2-d}/(2d) * r
  double escaped_correction = 0.0;  // (h^2/2d) sum_k r^{k+1} (1 - s_k), from tracked escape mass
  double p_bound_constant = 0.0;    // max over stored (x,k) of p / (e^{-|x|^2/2k}(1+k)^{-d/2})
  std::vector<int> box_extent;
  std::vector<double> g;            // g(x) on the l^1 ball, box storage

  double value(std::span<const int> x) const;
  double sum_hd() const;            // h^d sum over the window of g
};

// Series truncated when the geometric tail drops below tol (and never before
// the per-point operator residual bound r^{k+1} does).
GreenKernel green_kernel(double omega, int d, double h, int window_radius, double tol);

// (g*u)(x) = h^d sum_y g(y) u(x-y).  The result lives on u's window; the
// caller guarantees u's support plus the kernel radius fits the window of
// interest (checked: throws std::invalid_argument on overflow).
WindowField convolve(const GreenKernel& g, const WindowField& u);

struct KernelBoundReport {
  double C_hat = 0.0;   // smallest C with g(x) <= C h^{2-d}(sqrt d + |x|)^{2-d} e^{-c h |x|}
  double c_hat = 0.0;   // fitted decay constant
  double Cp_hat = 0.0;  // smallest C' with p(x,k) <= C' e^{-|x|^2/2k}(1+k)^{-d/2}
  bool envelope_holds = false;
  double fit_r2 = 0.0;  // r^2 of the log-envelope regression
};

// d >= 3 required for the kernel-envelope branch (the proposition's hypothesis).
KernelBoundReport verify_kernel_bounds(const GreenKernel& g);

// ||f||_{q,h} / (||f||_{2,h}^{1-theta} G_h(f)^{theta/2}) with 1/q = 1/2 - theta/d.
double gn_ratio(const WindowField& f, double q);

}  // namespace nlslab
