#include "nlc/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "nlc/kernels.hpp"
#include "nlc/operators.hpp"
#include "nlc/transform.hpp"

namespace nlc {

namespace kern = kernels::omp;

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

double def_norm_squared(const VectorField& u) {
  const TensorField def = def_tensor(u);
  double s = 0.0;
  for (int a = 0; a < def.rows(); ++a)
    for (int b = 0; b < def.rows(); ++b) {
      const double v = lp_norm(def(a, b), 2.0);
      s += v * v;
    }
  return s;
}

double director_defect_squared(const SimState& state, const SimParams& params) {
  VectorField r = laplacian(to_spectral(state.d));
  r -= to_spectral(gl_force(state.d, params.epsilon, params.dealias));
  const double v = lp_norm(r, 2.0);
  return v * v;
}

double square(double x) { return x * x; }

}  // namespace

EnergyComponents energy_components(const SimState& state, const SimParams& params) {
  EnergyComponents e;
  e.kinetic = 0.5 * square(lp_norm(state.u, 2.0));
  e.elastic = 0.5 * params.lambda * square(hs_seminorm(state.d, 1));
  e.penalty = params.lambda * gl_potential(state.d, params.epsilon);
  return e;
}

double total_energy(const SimState& state, const SimParams& params) {
  return energy_components(state, params).total();
}

double averaged_energy(const SimState& state, const SimParams& params) {
  double e = square(lp_norm(state.u, 2.0));
  if (params.alpha != 0.0) e += 2.0 * params.alpha * params.alpha * def_norm_squared(state.u);
  return 0.5 * e;
}

double dissipation(const SimState& state, const SimParams& params) {
  double viscous = 0.0;
  if (params.nu != 0.0) {
    if (params.model == Model::lc) {
      viscous = params.nu * def_norm_squared(state.u);
    } else {
      const double a2 = params.alpha * params.alpha;
      viscous = params.nu * (square(hs_seminorm(state.u, 1)) + a2 * square(hs_seminorm(state.u, 2)));
    }
  }
  double director = 0.0;
  if (params.lambda != 0.0) director = params.lambda * params.gamma * director_defect_squared(state, params);
  return viscous + director;
}

double law_energy(const DiagnosticsRecord& r, Model model) {
  return model == Model::lc ? r.total_E : r.E_alpha + r.elastic + r.penalty;
}

double energy_law_residual(double energy_prev, double energy_next, double dissipation_integral, double interval) {
  if (!(interval > 0.0)) throw std::invalid_argument("dt: energy_law_residual needs a positive interval");
  const double mean_d = dissipation_integral / interval;
  return std::abs((energy_next - energy_prev) / interval + mean_d) / std::max(mean_d, 1.0);
}

double energy_law_residual(const DiagnosticsRecord& prev, const DiagnosticsRecord& next, double dt, Model model) {
  return energy_law_residual(law_energy(prev, model), law_energy(next, model),
                             0.5 * dt * (prev.dissipation + next.dissipation), dt);
}

void EnergyLawMonitor::reset(double energy, double dissipation) {
  energy_ = energy;
  last_d_ = dissipation;
  integral_ = 0.0;
  interval_ = 0.0;
}

void EnergyLawMonitor::add_step(double dt, double d_next) {
  integral_ += 0.5 * dt * (last_d_ + d_next);
  interval_ += dt;
  last_d_ = d_next;
}

double EnergyLawMonitor::residual(double energy) const {
  if (interval_ == 0.0) return 0.0;
  return energy_law_residual(energy_, energy, integral_, interval_);
}

Helicity helicity(const VectorField& u, double alpha) {
  if (u.grid().dim() != 3) return {0.0, false};
  const VectorField v = helmholtz(to_spectral(u), alpha);
  return {l2_inner(v, curl(v)), true};
}

double frank_energy(const VectorField& d, double kappa1, double kappa2, double kappa3) {
  if (!(kappa1 >= 0.0 && kappa2 >= 0.0 && kappa3 >= 0.0))
    throw std::invalid_argument("frank_energy: elastic constants must be non-negative");
  const Grid& g = d.grid();
  const int dim = g.dim();
  if (d.size() != dim) throw std::invalid_argument("frank_energy: expected dim components");

  const VectorField dp = to_physical(d);
  // grad[c][a] = d_a d^c, with zero entries for the embedded third axis.
  std::vector<std::vector<double>> grad(9, std::vector<double>(g.size(), 0.0));
  for (int c = 0; c < dim; ++c) {
    const VectorField gc = gradient(dp[c]);
    for (int a = 0; a < dim; ++a) {
      auto v = gc[a].values();
      std::copy(v.begin(), v.end(), grad[static_cast<std::size_t>(c * 3 + a)].begin());
    }
  }
  std::vector<double> zero(g.size(), 0.0);
  auto comp = [&](int c) -> std::span<const double> {
    return c < dim ? dp[c].values() : std::span<const double>(zero);
  };
  const auto d0 = comp(0), d1 = comp(1), d2 = comp(2);
  auto G = [&](int c, int a, std::size_t p) { return grad[static_cast<std::size_t>(c * 3 + a)][p]; };

  const double w = g.cell_weight();
  const double s = kern::blocked_sum(g.size(), [&](std::size_t p) {
    const double div = G(0, 0, p) + G(1, 1, p) + G(2, 2, p);
    const double cx = G(2, 1, p) - G(1, 2, p);
    const double cy = G(0, 2, p) - G(2, 0, p);
    const double cz = G(1, 0, p) - G(0, 1, p);
    const double x = d0[p], y = d1[p], z = d2[p];
    const double twist = x * cx + y * cy + z * cz;
    const double bx = y * cz - z * cy, by = z * cx - x * cz, bz = x * cy - y * cx;
    return kappa1 * div * div + kappa2 * (bx * bx + by * by + bz * bz) + kappa3 * twist * twist;
  });
  return w * s;
}

DiagnosticsRecord diagnose(const SimState& state, const SimParams& params) {
  DiagnosticsRecord r;
  r.t = state.t;
  const EnergyComponents e = energy_components(state, params);
  r.kinetic = e.kinetic;
  r.elastic = e.elastic;
  r.penalty = e.penalty;
  r.total_E = e.total();
  r.E_alpha = params.model == Model::lc_alpha ? averaged_energy(state, params) : e.kinetic;
  r.dissipation = dissipation(state, params);

  const VectorField d = to_physical(state.d);
  std::vector<std::span<const double>> dv;
  for (const auto& c : d) dv.push_back(c.values());
  std::vector<double> mag(d.grid().size());
  kern::magnitude_squared(dv, mag);
  r.max_d = std::sqrt(kern::max_abs(mag));

  const VectorField us = to_spectral(state.u);
  const double grad_u = hs_seminorm(us, 1);
  r.enstrophy = grad_u * grad_u;
  r.div_residual = grad_u > 0.0 ? lp_norm(divergence(us), 2.0) / grad_u : 0.0;
  r.helicity = helicity(us, params.alpha).value;
  return r;
}

// ---------------------------------------------------------------------------

const char* to_string(GnFamily f) {
  switch (f) {
    case GnFamily::agmon: return "agmon";
    case GnFamily::ladyzhenskaya: return "ladyzhenskaya";
    case GnFamily::interp_1_2: return "interp_1_2";
    case GnFamily::interp_1_3: return "interp_1_3";
    case GnFamily::interp_2_3: return "interp_2_3";
    case GnFamily::l8: return "l8";
  }
  return "?";
}

std::array<double, gn_family_count> gn_ratios(const Field& v) {
  const Field phys = to_physical(v);
  const Field spec = to_spectral(v);
  const double l2 = lp_norm(spec, 2.0);
  const double d1 = hs_seminorm(spec, 1);
  const double d2 = hs_seminorm(spec, 2);
  const double d3 = hs_seminorm(spec, 3);
  const double h2 = std::sqrt(l2 * l2 + d1 * d1 + d2 * d2);
  auto ratio = [](double num, double den) { return den > 0.0 ? num / den : nan; };
  auto interp = [&](double di, double dm, double i, double m) {
    return ratio(di, std::pow(l2, 1.0 - i / m) * std::pow(dm, i / m));
  };
  return {
      ratio(lp_norm(phys, infinity_norm), std::sqrt(d2 * l2)),
      ratio(lp_norm(phys, 4.0), std::sqrt(d1 * l2)),
      interp(d1, d2, 1, 2),
      interp(d1, d3, 1, 3),
      interp(d2, d3, 2, 3),
      ratio(lp_norm(phys, 8.0), std::pow(l2, 5.0 / 8.0) * std::pow(h2, 3.0 / 8.0)),
  };
}

GnReport gn_probe(int dim, int n, std::size_t samples, std::uint64_t seed, std::size_t bins) {
  if (dim != 2) throw std::invalid_argument("dim: the interpolation probe is two-dimensional");
  if (samples < 1) throw std::invalid_argument("samples: at least one sample is required");
  if (n < 24) throw std::invalid_argument("n: the probe needs n >= 24");
  if (bins < 1) throw std::invalid_argument("bins: at least one bin is required");
  const Grid g = make_grid(2, n);
  const int h = g.half();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> band(1, 8);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);

  std::vector<std::vector<double>> values(gn_family_count);
  GnReport report{dim, n, samples, seed, {}};
  for (int f = 0; f < gn_family_count; ++f) report.families.push_back(GnFamilyReport{static_cast<GnFamily>(f), 0, 0, 0.0, 0.0, true, {}});

  for (std::size_t s = 0; s < samples; ++s) {
    const int K = band(rng);
    std::vector<cplx> modes(g.spectral_size(), cplx(0.0));
    auto slot = [&](int kx, int ky) -> cplx& {
      const int a = kx < 0 ? kx + n : kx;
      return modes[static_cast<std::size_t>(a) * static_cast<std::size_t>(h) + static_cast<std::size_t>(ky)];
    };
    for (int kx = -K; kx <= K; ++kx)
      for (int ky = 0; ky <= K; ++ky) {
        const double amp = 1.0 / (1.0 + kx * kx + ky * ky);
        const cplx c(amp * uniform(rng), amp * uniform(rng));
        if (ky > 0) {
          slot(kx, ky) = c;
        } else if (kx > 0) {
          slot(kx, 0) = c;
          slot(-kx, 0) = std::conj(c);
        } else if (kx == 0) {
          slot(0, 0) = c.real();
        }
      }
    const auto r = gn_ratios(Field::from_modes(g, std::move(modes)));
    for (int f = 0; f < gn_family_count; ++f) {
      auto& fam = report.families[static_cast<std::size_t>(f)];
      const double x = r[static_cast<std::size_t>(f)];
      if (std::isnan(x)) {
        ++fam.skipped;
        continue;
      }
      if (!std::isfinite(x)) fam.all_finite = false;
      ++fam.evaluated;
      values[static_cast<std::size_t>(f)].push_back(x);
    }
  }

  for (int f = 0; f < gn_family_count; ++f) {
    auto& fam = report.families[static_cast<std::size_t>(f)];
    const auto& xs = values[static_cast<std::size_t>(f)];
    fam.histogram.assign(bins, 0);
    if (xs.empty()) continue;
    fam.max = *std::max_element(xs.begin(), xs.end());
    fam.min = *std::min_element(xs.begin(), xs.end());
    for (double x : xs) {
      std::size_t b = fam.max > 0.0 ? static_cast<std::size_t>(x / fam.max * static_cast<double>(bins)) : 0;
      fam.histogram[std::min(b, bins - 1)]++;
    }
  }
  return report;
}

}  // namespace nlc
