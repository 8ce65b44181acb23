#include "nlc/initial.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "nlc/operators.hpp"

namespace nlc {

namespace {

VectorField unit_first_axis(const Grid& g) {
  return VectorField::sample(g, g.dim(), [](int c, double, double, double) { return c == 0 ? 1.0 : 0.0; });
}

struct Wave {
  int kx, ky, kz;
  double a, b;
};

/// Random trigonometric polynomial with |k_j| <= kmax and amplitudes
/// decaying like 1 / (1 + |k|^2); the mean mode is left out.
std::vector<Wave> random_waves(const Grid& g, int kmax, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  const int kz_max = g.dim() == 3 ? kmax : 0;
  std::vector<Wave> waves;
  for (int kx = -kmax; kx <= kmax; ++kx)
    for (int ky = -kmax; ky <= kmax; ++ky)
      for (int kz = -kz_max; kz <= kz_max; ++kz) {
        if (kx == 0 && ky == 0 && kz == 0) continue;
        const double s = 1.0 / (1.0 + kx * kx + ky * ky + kz * kz);
        waves.push_back({kx, ky, kz, s * uniform(rng), s * uniform(rng)});
      }
  return waves;
}

Field synthesize(const Grid& g, const std::vector<Wave>& waves) {
  const double k0 = g.k0();
  return Field::sample(g, [&](double x, double y, double z) {
    double s = 0.0;
    for (const auto& w : waves) {
      const double ph = k0 * (w.kx * x + w.ky * y + w.kz * z);
      s += w.a * std::cos(ph) + w.b * std::sin(ph);
    }
    return s;
  });
}

}  // namespace

SimState taylor_green_uniform_d(const Grid& g) {
  const double k0 = g.k0();
  const bool three = g.dim() == 3;
  VectorField u = VectorField::sample(g, g.dim(), [&](int c, double x, double y, double z) {
    const double cz = three ? std::cos(k0 * z) : 1.0;
    if (c == 0) return std::sin(k0 * x) * std::cos(k0 * y) * cz;
    if (c == 1) return -std::cos(k0 * x) * std::sin(k0 * y) * cz;
    return 0.0;
  });
  return {0.0, std::move(u), unit_first_axis(g)};
}

SimState vortex_pair(const Grid& g, double core) {
  if (!(core > 0.0)) throw std::invalid_argument("vortex_pair: core must be positive");
  const double k0 = g.k0();
  VectorField d = VectorField::sample(g, g.dim(), [&](int c, double x, double y, double) {
    if (c == 2) return 0.0;
    const double re = -std::sin(k0 * y);
    const double im = std::cos(k0 * x) + 0.75 * (1.0 + std::cos(k0 * y));
    const double r = std::hypot(re, im);
    if (r == 0.0) return 0.0;
    const double scale = std::tanh(r / core) / r;
    return scale * (c == 0 ? re : im);
  });
  return {0.0, VectorField(g, g.dim()), std::move(d)};
}

SimState random_seeded(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int dim = g.dim();

  std::vector<Field> comps;
  for (int c = 0; c < dim; ++c) comps.push_back(synthesize(g, random_waves(g, 4, rng)));
  VectorField u = leray_project(VectorField(std::move(comps)));
  const double rms = lp_norm(u, 2.0) / std::sqrt(g.volume());
  if (rms > 0.0) u *= 0.5 / rms;

  const Field theta = synthesize(g, random_waves(g, 4, rng));
  const Field tilt = dim == 3 ? synthesize(g, random_waves(g, 2, rng)) : Field(g);
  VectorField d(g, dim);
  auto th = theta.values();
  auto ph = tilt.values();
  const double k0 = g.k0();
  const int n = g.n();
  const std::size_t stride = g.size() / static_cast<std::size_t>(n);
  for (std::size_t p = 0; p < g.size(); ++p) {
    const double x = g.coordinate(static_cast<int>(p / stride));
    const double angle = k0 * x + th[p];
    const double tilt_angle = 0.5 * ph[p];
    d[0].values()[p] = std::cos(angle) * std::cos(tilt_angle);
    d[1].values()[p] = std::sin(angle) * std::cos(tilt_angle);
    if (dim == 3) d[2].values()[p] = std::sin(tilt_angle);
  }
  return {0.0, std::move(u), std::move(d)};
}

SimState initial_state(const Grid& g, std::string_view name, std::uint64_t seed) {
  if (name == "taylor-green-uniform-d") return taylor_green_uniform_d(g);
  if (name == "vortex-pair") return vortex_pair(g);
  if (name == "random-seeded") return random_seeded(g, seed);
  throw std::invalid_argument("init: unknown initial condition '" + std::string(name) + "'");
}

}  // namespace nlc
