// observables.cpp

#include "nlslab/observables.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace nlslab {

namespace {

double pow_abs(const cplx& z, double e) { return std::pow(std::abs(z), e); }

}  // namespace

double bond_sum(const Field& f) {
  const GridSpec& s = f.spec;
  double acc = 0.0;
  for (int ax = 0; ax < s.d; ++ax) {
    const i64 N = s.sites();
    for (i64 x = 0; x < N; ++x) {
      cplx diff = f[x] - f[s.neighbor(x, ax, +1)];
      acc += std::norm(diff);
    }
  }
  return acc;
}

ObservableSet observables(const Field& f, double p) {
  if (!(p > 1.0)) throw std::invalid_argument("observables: p must be > 1");
  f.require_finite("observables");
  const GridSpec& s = f.spec;
  const double hd = s.cell_volume();

  double m = 0.0, npow = 0.0;
  for (const auto& z : f.v) {
    m += std::norm(z);
    npow += pow_abs(z, p + 1.0);
  }
  ObservableSet obs;
  obs.mass = hd * m;
  obs.gradient = 0.5 * hd / (s.h * s.h) * bond_sum(f);
  obs.nonlinear = hd / (p + 1.0) * npow;
  obs.energy = obs.gradient - obs.nonlinear;
  return obs;
}

ObservableSet restricted_observables(const Field& f, double p, const SubsetMask& U) {
  if (!(p > 1.0)) throw std::invalid_argument("restricted_observables: p must be > 1");
  if (!(U.spec == f.spec))
    throw std::invalid_argument("restricted_observables: mask/field grid mismatch");
  f.require_finite("restricted_observables");
  const GridSpec& s = f.spec;
  const double hd = s.cell_volume();
  const i64 N = s.sites();

  double m = 0.0, npow = 0.0, bonds = 0.0;
  for (i64 x = 0; x < N; ++x) {
    if (!U.in[std::size_t(x)]) continue;
    m += std::norm(f[x]);
    npow += pow_abs(f[x], p + 1.0);
    for (int ax = 0; ax < s.d; ++ax) {
      i64 y = s.neighbor(x, ax, +1);
      if (U.in[std::size_t(y)]) bonds += std::norm(f[x] - f[y]);
    }
  }
  ObservableSet obs;
  obs.mass = hd * m;
  obs.gradient = 0.5 * hd / (s.h * s.h) * bonds;
  obs.nonlinear = hd / (p + 1.0) * npow;
  obs.energy = obs.gradient - obs.nonlinear;
  return obs;
}

double masked_mass(const Field& f, const std::vector<std::uint8_t>& sites) {
  double m = 0.0;
  for (std::size_t i = 0; i < f.v.size(); ++i)
    if (sites[i]) m += std::norm(f.v[i]);
  return f.spec.cell_volume() * m;
}

SubsetMask level_set(const Field& f, double delta) {
  if (delta < 0.0) throw std::invalid_argument("level_set: delta must be >= 0");
  std::vector<std::uint8_t> member(f.v.size(), 0);
  for (std::size_t i = 0; i < f.v.size(); ++i) member[i] = std::abs(f.v[i]) > delta;
  return SubsetMask::from_membership(f.spec, std::move(member));
}

SubsetMask special_set(const Field& f, double eps, double p) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("special_set: eps must lie in (0,1)");
  f.require_finite("special_set");
  const GridSpec& s = f.spec;
  const double m = observables(f, p).mass;

  SubsetMask u1 = level_set(f, eps);
  if (u1.empty()) {
    // Lemma's fallback: any singleton; take the argmax of |f|.
    std::size_t best = 0;
    double best_abs = -1.0;
    for (std::size_t i = 0; i < f.v.size(); ++i) {
      double a = std::abs(f.v[i]);
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    std::vector<std::uint8_t> member(f.v.size(), 0);
    member[best] = 1;
    u1 = SubsetMask::from_membership(s, std::move(member));
  }

  // Grow k dilation shells with k in [1/eps, 2/eps] and keep the one whose
  // boundary (dU u dU^c) carries the least mass.
  int k = int(std::ceil(1.0 / eps));
  SubsetMask cur = u1;
  SubsetMask best = cur;
  double best_saddle = HUGE_VAL;
  for (int i = 1; i <= k; ++i) {
    double saddle = 0.0;
    for (std::size_t j = 0; j < cur.in.size(); ++j)
      if (cur.inner_boundary[j] || cur.outer_boundary[j]) saddle += std::norm(f.v[j]);
    saddle *= s.cell_volume();
    if (saddle < best_saddle) {
      best_saddle = saddle;
      best = cur;
    }
    if (i < k) cur = cur.dilate();
  }

#ifndef NDEBUG
  std::string why;
  assert(special_set_conditions(f, eps, p, best, &why) && "special_set postcondition");
#endif
  (void)m;
  return best;
}

bool special_set_conditions(const Field& f, double eps, double p, const SubsetMask& U,
                            std::string* reason) {
  const GridSpec& s = f.spec;
  const double m = observables(f, p).mass;
  const double hd = s.cell_volume();

  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };

  if (U.empty()) return fail("U empty");

  // (i) cardinality
  double card_bound = std::pow(4.0, s.d) * m / (hd * std::pow(eps, double(s.d) + 2.0));
  if (double(U.count()) > card_bound + 1.0)  // +1: the singleton fallback for tiny fields
    return fail("(i) |U| too large");

  // (ii) |f| <= eps off U
  for (std::size_t i = 0; i < f.v.size(); ++i)
    if (!U.in[i] && std::abs(f.v[i]) > eps) return fail("(ii) |f| > eps outside U");

  // (iii) nonlinear term off U
  double npow = 0.0;
  for (std::size_t i = 0; i < f.v.size(); ++i)
    if (!U.in[i]) npow += std::pow(std::abs(f.v[i]), p + 1.0);
  double n_off = hd / (p + 1.0) * npow;
  if (n_off > std::pow(eps, p - 1.0) * m / (p + 1.0) + 1e-15)
    return fail("(iii) nonlinear mass outside U too large");

  // (iv) boundary mass
  double saddle = 0.0;
  for (std::size_t i = 0; i < f.v.size(); ++i)
    if (U.inner_boundary[i] || U.outer_boundary[i]) saddle += std::norm(f.v[i]);
  saddle *= hd;
  if (saddle > 2.0 * eps * m + 1e-15) return fail("(iv) boundary mass too large");

  return true;
}

VisibleInvisible visible_invisible_split(const Field& f, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("visible_invisible_split: delta must be > 0");
  VisibleInvisible out{Field(f.spec), Field(f.spec)};
  for (std::size_t i = 0; i < f.v.size(); ++i) {
    if (std::abs(f.v[i]) <= delta)
      out.invisible.v[i] = f.v[i];
    else
      out.visible.v[i] = f.v[i];
  }
  return out;
}

}  // namespace nlslab
