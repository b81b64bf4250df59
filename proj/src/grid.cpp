// grid.cpp

#include "nlslab/grid.hpp"

namespace nlslab {

SubsetMask SubsetMask::from_membership(const GridSpec& spec, std::vector<std::uint8_t> member) {
  spec.validate();
  if (i64(member.size()) != spec.sites())
    throw std::invalid_argument("SubsetMask: membership size mismatch");
  SubsetMask m;
  m.spec = spec;
  m.in = std::move(member);
  m.inner_boundary.assign(m.in.size(), 0);
  m.outer_boundary.assign(m.in.size(), 0);
  const i64 N = spec.sites();
  for (i64 x = 0; x < N; ++x) {
    bool inside = m.in[std::size_t(x)];
    bool touches_other = false;
    for (int ax = 0; ax < spec.d && !touches_other; ++ax) {
      for (int step : {-1, +1}) {
        i64 y = spec.neighbor(x, ax, step);
        if (bool(m.in[std::size_t(y)]) != inside) {
          touches_other = true;
          break;
        }
      }
    }
    if (touches_other) {
      if (inside)
        m.inner_boundary[std::size_t(x)] = 1;
      else
        m.outer_boundary[std::size_t(x)] = 1;
    }
  }
  return m;
}

SubsetMask SubsetMask::dilate() const {
  std::vector<std::uint8_t> grown = in;
  const i64 N = spec.sites();
  for (i64 x = 0; x < N; ++x) {
    if (!in[std::size_t(x)]) continue;
    for (int ax = 0; ax < spec.d; ++ax) {
      grown[std::size_t(spec.neighbor(x, ax, +1))] = 1;
      grown[std::size_t(spec.neighbor(x, ax, -1))] = 1;
    }
  }
  return from_membership(spec, std::move(grown));
}

}  // namespace nlslab
