// grid.hpp -- the discrete torus V_n, fields on it, subsets with their
// boundaries, and finite windows of Z^d.
//
// Conventions used throughout the library:
//   * sites of V_n are {0,...,n-1}^d, stored row-major (last axis fastest);
//   * x ~ y means |x-y| = 1 with subtraction mod n in each coordinate;
//   * a "bond" is an unordered neighbor pair, enumerated once as (x, x+e_i).

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace nlslab {

using cplx = std::complex<double>;
using i64 = std::int64_t;

struct GridSpec {
  int d = 1;
  int n = 2;
  double h = 1.0;

  i64 sites() const {
    i64 s = 1;
    for (int i = 0; i < d; ++i) s *= n;
    return s;
  }

  double cell_volume() const {
    double v = 1.0;
    for (int i = 0; i < d; ++i) v *= h;
    return v;  // h^d
  }

  double box_length() const { return h * n; }

  void validate() const {
    if (d < 1) throw std::invalid_argument("GridSpec: d must be >= 1");
    if (n < 2) throw std::invalid_argument("GridSpec: n must be >= 2");
    if (!(h > 0.0)) throw std::invalid_argument("GridSpec: h must be > 0");
  }

  // Strides for row-major storage: index = sum_i x_i * stride(i).
  i64 stride(int axis) const {
    i64 s = 1;
    for (int i = axis + 1; i < d; ++i) s *= n;
    return s;
  }

  i64 index(std::span<const int> x) const {
    i64 idx = 0;
    for (int i = 0; i < d; ++i) idx = idx * n + x[i];
    return idx;
  }

  void coords(i64 idx, std::span<int> x) const {
    for (int i = d - 1; i >= 0; --i) {
      x[i] = int(idx % n);
      idx /= n;
    }
  }

  // Torus neighbor in +1 / -1 direction along an axis.
  i64 neighbor(i64 idx, int axis, int step) const {
    i64 s = stride(axis);
    int xi = int((idx / s) % n);
    int yi = xi + step;
    if (yi >= n) yi -= n;
    if (yi < 0) yi += n;
    return idx + i64(yi - xi) * s;
  }

  // l^1 distance on the torus between sites given by flat indices.
  int torus_l1(i64 a, i64 b) const {
    int dist = 0;
    for (int i = d - 1; i >= 0; --i) {
      int ai = int(a % n), bi = int(b % n);
      a /= n;
      b /= n;
      int diff = ai - bi;
      if (diff < 0) diff = -diff;
      dist += std::min(diff, n - diff);
    }
    return dist;
  }

  bool operator==(const GridSpec&) const = default;
};

struct Field {
  GridSpec spec;
  std::vector<cplx> v;

  Field() = default;
  explicit Field(GridSpec s) : spec(s), v(std::size_t(s.sites()), cplx(0.0, 0.0)) {
    spec.validate();
  }

  static Field constant(GridSpec s, cplx c) {
    Field f(s);
    for (auto& z : f.v) z = c;
    return f;
  }

  cplx& operator[](i64 i) { return v[std::size_t(i)]; }
  const cplx& operator[](i64 i) const { return v[std::size_t(i)]; }
  i64 size() const { return i64(v.size()); }

  bool all_finite() const {
    for (const auto& z : v)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  void require_finite(const char* who) const {
    if (!all_finite())
      throw std::invalid_argument(std::string(who) + ": field has non-finite values");
  }
};

// A subset U of V_n together with its inner boundary dU (points of U adjacent
// to U^c) and the complement boundary dU^c (points of U^c adjacent to U),
// both with torus adjacency.
struct SubsetMask {
  GridSpec spec;
  std::vector<std::uint8_t> in;              // membership
  std::vector<std::uint8_t> inner_boundary;  // dU, subset of U
  std::vector<std::uint8_t> outer_boundary;  // dU^c, subset of U^c

  static SubsetMask from_membership(const GridSpec& spec, std::vector<std::uint8_t> member);

  i64 count() const {
    i64 c = 0;
    for (auto b : in) c += b;
    return c;
  }

  bool empty() const { return count() == 0; }

  // U together with all torus neighbors of U.
  SubsetMask dilate() const;

  SubsetMask complement() const {
    std::vector<std::uint8_t> m(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) m[i] = !in[i];
    return from_membership(spec, std::move(m));
  }
};

// A finite box window of Z^d at grid size h: sites lo + {0..extent_i-1},
// value zero outside.  Used for extensions of torus fields, Green kernels
// and interpolation.
struct WindowSpec {
  int d = 1;
  double h = 1.0;
  std::vector<int> lo;      // d entries
  std::vector<int> extent;  // d entries, >= 1

  i64 cells() const {
    i64 s = 1;
    for (int e : extent) s *= e;
    return s;
  }
  double cell_volume() const {
    double v = 1.0;
    for (int i = 0; i < d; ++i) v *= h;
    return v;
  }
  i64 index(std::span<const int> x) const {  // x in absolute coordinates
    i64 idx = 0;
    for (int i = 0; i < d; ++i) idx = idx * extent[i] + (x[i] - lo[i]);
    return idx;
  }
  bool contains(std::span<const int> x) const {
    for (int i = 0; i < d; ++i)
      if (x[i] < lo[i] || x[i] >= lo[i] + extent[i]) return false;
    return true;
  }
  void coords(i64 idx, std::span<int> x) const {
    for (int i = d - 1; i >= 0; --i) {
      x[i] = lo[i] + int(idx % extent[i]);
      idx /= extent[i];
    }
  }
};

struct WindowField {
  WindowSpec spec;
  std::vector<cplx> v;

  WindowField() = default;
  explicit WindowField(WindowSpec s) : spec(std::move(s)), v(std::size_t(spec.cells()), cplx(0, 0)) {}

  cplx at(std::span<const int> x) const {
    if (!spec.contains(x)) return cplx(0, 0);
    return v[std::size_t(spec.index(x))];
  }
  cplx& ref(std::span<const int> x) { return v[std::size_t(spec.index(x))]; }
};

}  // namespace nlslab
