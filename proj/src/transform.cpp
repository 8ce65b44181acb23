#include "nlc/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "nlc/kernels.hpp"

namespace nlc {

namespace {

// Estimated plans, made on 64-byte aligned arrays like all field storage.
constexpr unsigned plan_flags = FFTW_ESTIMATE;

struct Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  ~Plans() {
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

const Plans& plans_for(const Grid& g) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<Plans>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{g.dim(), g.n()}];
  if (!slot) {
    slot = std::make_unique<Plans>();
    RealBuffer real(g.size());
    ComplexBuffer spec(g.spectral_size());
    int dims[3] = {g.n(), g.n(), g.n()};
    auto* c = reinterpret_cast<fftw_complex*>(spec.data());
    slot->forward = fftw_plan_dft_r2c(g.dim(), dims, real.data(), c, plan_flags);
    slot->backward = fftw_plan_dft_c2r(g.dim(), dims, c, real.data(), plan_flags);
    if (!slot->forward || !slot->backward) throw std::runtime_error("fft: planning failed");
  }
  return *slot;
}

}  // namespace

Field to_spectral(const Field& f) {
  if (f.is_spectral()) return f;
  const Grid& g = f.grid();
  auto in = f.values();
  for (double x : in)
    if (!std::isfinite(x)) throw std::domain_error("to_spectral: non-finite sample");
  ComplexBuffer modes(g.spectral_size());
  // Out-of-place r2c leaves its input untouched.
  fftw_execute_dft_r2c(plans_for(g).forward, const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(modes.data()));
  const double scale = 1.0 / static_cast<double>(g.size());
  kernels::omp::for_each_index(modes.size(), [&](std::size_t i) { modes[i] *= scale; });
  return Field::from_modes(g, std::move(modes));
}

Field to_physical(const Field& f) {
  if (f.is_physical()) return f;
  const Grid& g = f.grid();
  auto m = f.modes();
  // c2r overwrites its input.
  ComplexBuffer scratch(m.begin(), m.end());
  RealBuffer values(g.size());
  fftw_execute_dft_c2r(plans_for(g).backward, reinterpret_cast<fftw_complex*>(scratch.data()), values.data());
  return Field::from_values(g, std::move(values));
}

VectorField to_spectral(const VectorField& v) {
  std::vector<Field> out;
  for (const auto& c : v) out.push_back(to_spectral(c));
  return VectorField(std::move(out));
}

VectorField to_physical(const VectorField& v) {
  std::vector<Field> out;
  for (const auto& c : v) out.push_back(to_physical(c));
  return VectorField(std::move(out));
}

Field as_representation(const Field& f, Representation rep) {
  return rep == Representation::physical ? to_physical(f) : to_spectral(f);
}

VectorField as_representation(const VectorField& v, Representation rep) {
  return rep == Representation::physical ? to_physical(v) : to_spectral(v);
}

}  // namespace nlc
