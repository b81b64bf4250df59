// dnls.hpp -- time integration of i du/dt = -Delta u - |u|^{p-1} u on the
// torus and the soliton-residence time-average statistic.

#pragma once

#include "nlslab/grid.hpp"
#include "nlslab/pseudometric.hpp"

namespace nlslab {

struct FlowConfig {
  double dt = 1e-3;
  double T = 1.0;
  enum class Scheme { splitstep, rk4 } scheme = Scheme::splitstep;
  double p = 3.0;
  int record_every = 10;
};

// Strang splitting: exact nonlinear half phase, exact linear step, half phase.
Field step_splitstep(const Field& u, double dt, double p);

// Classical RK4 on the full right-hand side; dt must sit below ~ C h^2 or the
// mass blows up (detected by evolve).
Field step_rk4(const Field& u, double dt, double p);

struct TrajectoryStats {
  std::vector<double> times;
  std::vector<double> mass;
  std::vector<double> energy;
  std::vector<double> distance;  // L~^inf to the reference, when given
  double mass_drift = 0.0;       // max relative |M(t)-M(0)|/M(0)
  double energy_drift = 0.0;
  double src_fraction = 0.0;     // (1/T) int 1{distance > delta} dt
  bool unstable = false;
};

// reference == nullptr skips the distance series (src_fraction stays 0).
TrajectoryStats evolve(const Field& u0, const FlowConfig& cfg, const Field* reference,
                       double delta);

// Evolves every sample and reports its src_fraction.
std::vector<double> src_experiment(const FlowConfig& cfg, std::span<const Field> samples,
                                   const Field& reference, double delta);

}  // namespace nlslab
