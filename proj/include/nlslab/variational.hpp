// variational.hpp -- the (E,m) variational problem: Theta, the feasible
// region R(E0,m0,h), the maximizer set M, Theta-hat, the K set, and the h->0
// trend of the maximizers.

#pragma once

#include "nlslab/rate_function.hpp"
#include "nlslab/soliton.hpp"

namespace nlslab {

// Theta(E,m,h) = log m - Psi_d(2 h^2 E / m); -inf at m = 0 or when Psi = inf.
double theta(double E, double m, double h, int d, const QuadratureConfig& = {});

struct RegionCurves {
  double m0 = 0.0, E0 = 0.0, h = 0.0;
  std::vector<double> m_grid;   // increasing in [0, m0]
  std::vector<double> E_minus;  // E0 - 2d(m0-m)/h^2
  std::vector<double> E_plus;   // E0 - E_min(m0-m, h)
  std::vector<std::uint8_t> feasible;  // max{E_minus, 0} <= E_plus
  bool nonempty = false;
};

RegionCurves region(double E0, double m0, double h, int d, const EminTable& emin,
                    int grid_points = 512);

struct MaximizerSet {
  std::vector<std::pair<double, double>> points;  // (E*, m*), E* = E_plus(m*)
  double theta_hat = 0.0;
  double tolerance = 0.0;
};

// Reduces to the 1-D problem max_m Theta(E_plus(m), m, h); returns all
// grid-refined local maxima within tol of the global maximum.
MaximizerSet maximizer_set(double E0, double m0, double h, int d, const EminTable& emin,
                           double tol = 0.0, int grid_points = 512);

struct KSet {
  std::vector<double> masses;  // soliton masses m' maximizing the score
  std::vector<double> scores;  // q(m') at those masses
  double q_hat = 0.0;
  bool radiating = false;      // no finite-score m' (2h^2(E0-E_min)/(m0-m') >= 4d everywhere)
};

// Direct maximization of q(m') = log(m0-m') - Psi_d(2h^2(E0-E_min(m'))/(m0-m')),
// cross-checked against {m0 - m*} from maximizer_set.
KSet k_set(double E0, double m0, double h, int d, const EminTable& emin, double tol = 0.0,
           int grid_points = 512);

struct TrendRow {
  double h = 0.0;
  double m_h = 0.0;  // invisible-mass coordinate of a maximizer
  double E_h = 0.0;
};

// One row per grid size; reference value E0 - E_min(m0) comes from the caller's
// continuum oracle.
std::vector<TrendRow> continuum_limit_trend(double E0, double m0, std::span<const double> h_seq,
                                            std::span<const EminTable> tables, int d);

}  // namespace nlslab
