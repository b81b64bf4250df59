// soliton.hpp -- discrete ground states by normalized gradient flow plus the
// Green-function fixed point, exponential-decay verification with explicit
// constants, E_min tabulation, the continuum ground state by shooting, and
// the discrete-to-continuum convergence study.

#pragma once

#include <filesystem>
#include <optional>

#include "nlslab/grid.hpp"
#include "nlslab/pseudometric.hpp"
#include "nlslab/rng.hpp"

namespace nlslab {

struct SolverOptions {
  int max_flow_iters = 20000;
  int max_polish_sweeps = 400;
  double flow_grad_tol = 1e-9;    // stop the flow when the projected step stalls
  double residual_tol = 1e-10;    // target relative soliton-equation residual
  int multistarts = 3;
  std::uint64_t seed = 1;
  bool quiet = true;
  const Field* warm_start = nullptr;
};

struct DiscreteSoliton {
  Field q;          // canonical gauge: peak at the origin, q(peak) real positive
  double m = 0.0;
  double h = 0.0;
  double p = 0.0;
  double energy = 0.0;
  double omega = 0.0;
  double residual = 0.0;
  double decay_A = 0.0, decay_b = 0.0;  // filled by decay_fit
};

DiscreteSoliton ground_state(double m, const GridSpec& spec, double p,
                             const SolverOptions& opts = {});

// omega = (-h^{-2} sum_bonds |q(x)-q(y)|^2 + sum |q|^{p+1}) / sum |q|^2.
double lagrange_multiplier(const Field& q, double p);

// Relative l^2 residual of (2d h^{-2} + omega) q(x) - h^{-2} sum_{y~x} q(y) - |q|^{p-1} q.
double residual(const Field& q, double omega, double p);

struct DecayFit {
  double A = 0.0, b = 0.0;   // log|q| ~ log A - b * D_delta
  double r_squared = 0.0;
  bool bound_ok = false;     // |q(x)| <= 2 C0 r^{D_delta(x)/2} pointwise
  double C0 = 0.0;           // omega^{-1} m^{p+1} h^{-d(p-1)} delta^{-2}
  double r = 0.0;            // 2d/(2d + omega h^2)
  double delta = 0.0;        // level actually used
  bool smallness_ok = false; // delta^{p-1} omega^{-1} sum_y r^{|y|_1/2} <= 1/2
};

// delta <= 0 picks the largest level meeting the smallness condition.
DecayFit decay_fit(const DiscreteSoliton& s, double delta = 0.0);

// l^1 torus distance to the sites of U (multi-source BFS); n^d entries.
std::vector<int> l1_distance_to(const SubsetMask& U);

struct EminTable {
  double p = 3.0;
  int d = 1;
  double h = 0.0;
  int n = 0;
  std::vector<double> masses;     // increasing, starting at 0
  std::vector<double> emin;       // achieved upper bounds on E_min(m,h,n)
  std::vector<double> omega;
  std::vector<double> residual;
  std::vector<int> flags;         // 0 ok, 1 solver warning

  double operator()(double m) const;  // monotone cubic (Fritsch-Carlson) interpolation
  void save(const std::filesystem::path& path) const;
  static EminTable load(const std::filesystem::path& path);
  static EminTable from_values(double p, int d, double h, int n, std::vector<double> masses,
                               std::vector<double> emin);
};

EminTable emin_table(std::span<const double> m_grid, const GridSpec& spec, double p,
                     const SolverOptions& opts = {});

struct ContinuumGroundState {
  double p = 3.0;
  int d = 1;
  double Q0 = 0.0;            // Q(0), the shooting parameter
  double dr = 0.0;            // uniform sampling step of the stored profile
  std::vector<double> Q;      // Q(k*dr), k = 0..; decays below 1e-12 at the end
  double MQ = 0.0, HQ = 0.0;  // mass and energy of Q
  double alpha_exponent = 0.0;  // E_min(m) = m^alpha E_min(1)

  double value(double rad) const;  // cubic interpolation of the radial profile
};

ContinuumGroundState continuum_ground_state(double p, int d);

struct ScaledGroundState {
  double lambda = 0.0;  // Q_{lambda(m)} scaling
  double emin = 0.0;    // continuum E_min(m)
};
ScaledGroundState scale_and_mass(const ContinuumGroundState& gs, double m);

// Samples Q_lambda(x) = lambda^{2/(p-1)} Q(lambda |x|) at cell centers offset
// by sub-cell shift s (one value per axis, in units of h).
Field sample_profile(const ContinuumGroundState& gs, double lambda, const GridSpec& spec,
                     std::span<const double> subcell_shift);

// L~^q distance between the continuum image of f and Q_lambda, i.e. the
// h^{d/q}-weighted pseudometric minimized over lattice shifts, phases and one
// sub-cell offset refinement per axis.
double profile_distance(const Field& f, const ContinuumGroundState& gs, double lambda, double q);

struct ConvergenceRow {
  double h = 0.0;
  int n = 0;
  double emin_h = 0.0;
  double emin_gap = 0.0;               // |E_min(m,h) - E_min(m)|
  std::vector<double> distances;       // one per requested q
};

std::vector<ConvergenceRow> convergence_study(double m, std::span<const double> h_seq, double p,
                                              std::span<const double> q_exponents, double box_length,
                                              const SolverOptions& opts = {});

}  // namespace nlslab
