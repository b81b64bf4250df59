// spectral.cpp

#include "nlslab/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace nlslab {

namespace {

// Plans are cached per (d, n, sign) and created with FFTW_UNALIGNED so they
// can run on any buffer via the new-array interface.  Plan creation is the
// only non-reentrant FFTW call; executions are thread-safe.
class PlanCache {
 public:
  static fftw_plan get(const GridSpec& spec, int sign) {
    static PlanCache cache;
    std::scoped_lock lk(cache.mu_);
    auto key = std::tuple(spec.d, spec.n, sign);
    auto it = cache.plans_.find(key);
    if (it != cache.plans_.end()) return it->second;

    std::vector<int> dims(std::size_t(spec.d), spec.n);
    std::vector<cplx> probe(std::size_t(spec.sites()));
    fftw_plan plan = fftw_plan_dft(spec.d, dims.data(),
                                   reinterpret_cast<fftw_complex*>(probe.data()),
                                   reinterpret_cast<fftw_complex*>(probe.data()), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

void run_fft(const GridSpec& spec, int sign, const std::vector<cplx>& in, std::vector<cplx>& out) {
  fftw_plan plan = PlanCache::get(spec, sign);
  out.resize(in.size());
  // The new-array execute requires distinct in/out only if the plan was not
  // in-place; we created an in-place plan, so copy first and transform in out.
  out = in;
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(out.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

SpectralBasis eigenvalues(const GridSpec& spec) {
  spec.validate();
  SpectralBasis basis;
  basis.spec = spec;
  basis.eigenvalues.assign(std::size_t(spec.sites()), 0.0);

  // Per-axis table of 4 sin^2(pi k / n), then tensor sum.
  std::vector<double> axis(std::size_t(spec.n));
  for (int k = 0; k < spec.n; ++k) {
    double sn = std::sin(M_PI * double(k) / double(spec.n));
    axis[std::size_t(k)] = 4.0 * sn * sn;
  }
  const i64 N = spec.sites();
  std::vector<int> y(std::size_t(spec.d));
  for (i64 idx = 0; idx < N; ++idx) {
    spec.coords(idx, y);
    double lam = 0.0;
    for (int i = 0; i < spec.d; ++i) lam += axis[std::size_t(y[std::size_t(i)])];
    basis.eigenvalues[std::size_t(idx)] = lam;
  }
  return basis;
}

std::vector<cplx> to_fourier(const Field& f) {
  // (R* f)(y) = n^{-d/2} sum_x f(x) e^{-2 pi i x.y / n}: FFTW_FORWARD scaled.
  std::vector<cplx> out;
  run_fft(f.spec, FFTW_FORWARD, f.v, out);
  const double scale = 1.0 / std::sqrt(double(f.spec.sites()));
  for (auto& z : out) z *= scale;
  return out;
}

Field from_fourier(const GridSpec& spec, std::span<const cplx> coef) {
  if (i64(coef.size()) != spec.sites())
    throw std::invalid_argument("from_fourier: coefficient count mismatch");
  Field f(spec);
  std::vector<cplx> in(coef.begin(), coef.end());
  run_fft(spec, FFTW_BACKWARD, in, f.v);
  const double scale = 1.0 / std::sqrt(double(spec.sites()));
  for (auto& z : f.v) z *= scale;
  return f;
}

Field apply_laplacian(const Field& f) {
  const GridSpec& s = f.spec;
  Field out(s);
  const double inv_h2 = 1.0 / (s.h * s.h);
  const i64 N = s.sites();
  for (i64 x = 0; x < N; ++x) {
    cplx acc = -2.0 * double(s.d) * f[x];
    for (int ax = 0; ax < s.d; ++ax) {
      acc += f[s.neighbor(x, ax, +1)];
      acc += f[s.neighbor(x, ax, -1)];
    }
    out[x] = inv_h2 * acc;
  }
  return out;
}

Field linear_propagator(const Field& f, double t) {
  SpectralBasis basis = eigenvalues(f.spec);
  std::vector<cplx> coef = to_fourier(f);
  const double inv_h2 = 1.0 / (f.spec.h * f.spec.h);
  for (std::size_t y = 0; y < coef.size(); ++y) {
    double phase = -basis.eigenvalues[y] * inv_h2 * t;
    coef[y] *= cplx(std::cos(phase), std::sin(phase));
  }
  return from_fourier(f.spec, coef);
}

Field solve_helmholtz(const Field& u, double omega) {
  if (!(omega > 0.0))
    throw std::invalid_argument("solve_helmholtz: omega must be > 0 (operator not positive definite)");
  SpectralBasis basis = eigenvalues(u.spec);
  std::vector<cplx> coef = to_fourier(u);
  const double inv_h2 = 1.0 / (u.spec.h * u.spec.h);
  for (std::size_t y = 0; y < coef.size(); ++y)
    coef[y] /= omega + basis.eigenvalues[y] * inv_h2;
  return from_fourier(u.spec, coef);
}

}  // namespace nlslab
