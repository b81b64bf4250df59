// rate_function.hpp -- the large-deviation rate function Psi_d for the
// Dirichlet form of a uniform point on the complex sphere, its smoothed
// variant, the finite-n rate functions, and Monte Carlo verification of the
// LDP with exponential tilting.

#pragma once

#include "nlslab/grid.hpp"
#include "nlslab/rng.hpp"

namespace nlslab {

struct QuadratureConfig {
  int nodes_d1 = 256;     // Gauss-Legendre nodes per axis, d <= 2
  int nodes_d3 = 64;      // per axis for d = 3 (tensor product)
  long mc_samples = 400000;  // plain MC fallback for d >= 4
  std::uint64_t mc_seed = 20240901;
};

// K_alpha(gamma) = int_{[0,1]^d} log(1 - gamma + (4 gamma / alpha) sum_i sin^2(pi x_i)) dx.
// Preconditions: alpha in (0, 2d], gamma in [0, 1).  gamma = 1 is accepted as
// the boundary limit (the integrand stays integrable).
double k_alpha(double alpha, double gamma, int d, const QuadratureConfig& = {});

// d = 1 closed form: int_0^1 log(a + b sin^2 pi x) dx = 2 log((sqrt a + sqrt(a+b))/2).
double k_alpha_closed_d1(double alpha, double gamma);

struct PsiEvaluation {
  double alpha = 0.0;
  double gamma_star = 0.0;  // meaningful when finite and not boundary
  bool boundary = false;    // supremum attained only as gamma -> 1
  double value = 0.0;       // in [0, inf]; IEEE infinity outside (0, 4d)
  double quad_error = 0.0;
};

PsiEvaluation psi(double alpha, int d, const QuadratureConfig& = {});

// Theorem-form smoothing: Psi_d(alpha+eps) / 0 / Psi_d(alpha-eps).
double psi_eps(double alpha, double eps, int d, const QuadratureConfig& = {});

enum class Tail { lower, upper };

// I_n(theta) (lower tail) or J_n(theta) (upper tail) by exact summation over
// the eigenvalues of Gamma.  Throws std::domain_error if theta leaves the
// admissible range (log of a non-positive argument).
double finite_n_rate(double theta, double alpha, const GridSpec& spec, Tail tail);

// argmax of the finite-n rate over its admissible theta interval.
double finite_n_rate_argmax(double alpha, const GridSpec& spec, Tail tail);

struct LdpEstimate {
  double estimate = 0.0;  // n^{-d} log P
  double ci_lo = 0.0, ci_hi = 0.0;  // 95% CI for the estimate
  double theta_star = 0.0;          // tilt actually used (0 when untilted)
  long n_samples = 0;
  bool tilted = false;
  double hit_fraction = 0.0;        // untilted: raw hit rate
};

// Estimates n^{-d} log P(sum_y (lambda_y - alpha) eta_y <= 0) for alpha < 2d
// (>= 0 for alpha > 2d) with iid mean-one exponentials eta.  When tilted,
// samples eta'(y) ~ Exp(mean 1/(1 +- theta'(lambda_y - alpha))) and reweights
// by the exact likelihood ratio; theta' sits at the finite-n rate optimum.
// conditioned_delta > 0 additionally requires max_x |xi(x)|^2 <= n^{-d(1-delta)}
// of the associated sphere point (reported, not tilted on).
LdpEstimate ldp_probability_mc(const GridSpec& spec, double alpha, long n_samples, bool tilted,
                               Rng& rng, double conditioned_delta = 0.0);

struct SphereSample {
  Field xi;          // unit l^2 norm
  double dirichlet;  // sum over bonds |xi(x)-xi(y)|^2 = (xi, Gamma xi) in [0, 4d]
};
SphereSample sphere_gradient_sampler(const GridSpec& spec, Rng& rng);

}  // namespace nlslab
