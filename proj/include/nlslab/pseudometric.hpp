// pseudometric.hpp -- the translation/phase-invariant L^q distance
//   L~^q(u,v) = inf over torus shifts x0 and unit phases a0 of ||u - a0 v(.+x0)||_q.
//
// Norms here are the plain l^q norms on C^{V_n}; continuum comparisons apply
// the h^{d/q} weight separately (||w~||_{L^q(R^d)} = h^{d/q} ||w||_q for the
// piecewise-constant image).

#pragma once

#include "nlslab/grid.hpp"

namespace nlslab {

struct PseudoDistance {
  double q = 2.0;  // HUGE_VAL means the sup norm
  double distance = 0.0;
  std::vector<int> best_shift;  // x0, d entries
  cplx best_phase{1.0, 0.0};    // a0
  bool global_optimum = true;   // exact for q = 2; upper bound otherwise
};

// q in [1, inf]; pass std::numeric_limits<double>::infinity() for q = inf.
// For q = 2 the optimum is exact (FFT cross-correlation + closed-form phase);
// for q != 2 the q = 2 optimizer seeds a local search over shifts (+-2 per
// axis) with a 64-point phase grid refined by golden section.
PseudoDistance pseudometric(const Field& u, const Field& v, double q);

// ||u - a v(.+s)||_q for a fixed shift and phase (helper shared with tests).
double shifted_norm(const Field& u, const Field& v, std::span<const int> shift, cplx phase,
                    double q);

// Plain l^q norm of a field (q = inf -> max over sites).
double lq_norm(const Field& f, double q);

// Warm-started L~^inf distance for use along trajectories: the search starts
// from the previous frame's optimal shift and phase.
struct DistanceTracker {
  std::vector<int> shift;
  cplx phase{1.0, 0.0};
  bool initialized = false;
};
double linf_distance_tracked(const Field& u, const Field& ref, DistanceTracker& tracker);

}  // namespace nlslab
