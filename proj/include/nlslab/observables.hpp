// observables.hpp -- mass and energy functionals on torus fields, level sets,
// the special-set construction, and the visible/invisible decomposition.
//
// Gradient convention: the double sum over neighbor pairs in the energy is a
// sum over unordered bonds, so
//     G = (h^{d-2}/2) * sum_{bonds {x,y}} |v(x)-v(y)|^2 = (h^{d-2}/2) (v, Gamma v),
// which reproduces E_max(m,h) = 2dm/h^2 and the continuum limit (1/2)|grad v|^2.

#pragma once

#include "nlslab/grid.hpp"

namespace nlslab {

struct ObservableSet {
  double mass = 0.0;
  double gradient = 0.0;
  double nonlinear = 0.0;
  double energy = 0.0;  // always gradient - nonlinear as computed
};

ObservableSet observables(const Field& f, double p);
ObservableSet restricted_observables(const Field& f, double p, const SubsetMask& U);

// Sum over unordered bonds of |f(x)-f(y)|^2; equals (f, Gamma f).
double bond_sum(const Field& f);

// Mass restricted to a site set given as a mask over the field's grid.
double masked_mass(const Field& f, const std::vector<std::uint8_t>& sites);

// { x : |f(x)| > delta }.  Empty mask allowed; callers choose the fallback.
SubsetMask level_set(const Field& f, double delta);

// The small set U with
//   (i)   |U| <= 4^d m / (h^d eps^{d+2})
//   (ii)  |f| <= eps on U^c
//   (iii) N_{h,n}(f, U^c) <= eps^{p-1} m / (p+1)
//   (iv)  M_{h,n}(f, dU u dU^c) <= 2 eps m
// built by growing dilation shells around the eps level set (singleton
// fallback at the argmax of |f| when the level set is empty) and picking the
// shell with the least boundary mass.
SubsetMask special_set(const Field& f, double eps, double p);

// Re-checks (i)-(iv) for a candidate U; reason describes the first failure.
bool special_set_conditions(const Field& f, double eps, double p, const SubsetMask& U,
                            std::string* reason = nullptr);

struct VisibleInvisible {
  Field visible;    // f on {|f| > delta}
  Field invisible;  // f on {|f| <= delta}
};
VisibleInvisible visible_invisible_split(const Field& f, double delta);

}  // namespace nlslab
