#include "nlc/dynamics.hpp"

#include <cmath>
#include <span>
#include <vector>

#include "nlc/kernels.hpp"
#include "nlc/operators.hpp"
#include "nlc/transform.hpp"

namespace nlc {

namespace kern = kernels::omp;

const char* to_string(Model m) { return m == Model::lc ? "lc" : "lc-alpha"; }
const char* to_string(Integrator i) { return i == Integrator::imex1 ? "imex1" : "imex2"; }

void SimParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  require(std::isfinite(nu) && nu >= 0.0, "nu: must be non-negative");
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda: must be non-negative");
  require(std::isfinite(gamma) && gamma > 0.0, "gamma: must be positive");
  require(std::isfinite(epsilon) && epsilon > 0.0, "epsilon: must be positive");
  require(std::isfinite(alpha) && alpha >= 0.0, "alpha: must be non-negative");
  require(std::isfinite(dt) && dt > 0.0, "dt: must be positive");
  require(model == Model::lc_alpha || alpha == 0.0, "alpha: model lc requires alpha = 0");
}

namespace {

std::vector<std::span<const double>> const_views(const std::vector<Field>& fields) {
  std::vector<std::span<const double>> out;
  out.reserve(fields.size());
  for (const auto& f : fields) out.push_back(f.values());
  return out;
}

std::vector<std::span<double>> mutable_views(std::vector<Field>& fields) {
  std::vector<std::span<double>> out;
  out.reserve(fields.size());
  for (auto& f : fields) out.push_back(f.values());
  return out;
}

std::vector<Field> physical_components(const VectorField& v) {
  std::vector<Field> out;
  for (const auto& c : v) out.push_back(to_physical(c));
  return out;
}

/// Physical samples of d_j w_i, stored at i * dim + j.
std::vector<Field> physical_gradient(const VectorField& w) {
  const Grid& g = w.grid();
  const int dim = g.dim();
  std::vector<Field> out;
  out.reserve(static_cast<std::size_t>(w.size() * dim));
  Field tmp(g, Representation::spectral);
  for (const auto& c : w) {
    const Field spec = to_spectral(c);
    for (int j = 0; j < dim; ++j) {
      kern::derivative(g, j, spec.modes(), tmp.modes());
      out.push_back(to_physical(tmp));
    }
  }
  return out;
}

Field forward(const Field& phys, bool dealias) {
  Field s = to_spectral(phys);
  if (dealias) kern::truncate_two_thirds(s.grid(), s.modes());
  return s;
}

/// Spectral divergence over the second index of a row-major dim x dim tensor
/// given by its spectral entries.
std::vector<Field> divergence_rows(const Grid& g, const std::vector<Field>& t) {
  const int dim = g.dim();
  std::vector<Field> out;
  Field tmp(g, Representation::spectral);
  for (int a = 0; a < dim; ++a) {
    Field acc(g, Representation::spectral);
    for (int b = 0; b < dim; ++b) {
      kern::derivative(g, b, t[static_cast<std::size_t>(a * dim + b)].modes(), tmp.modes());
      acc += tmp;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

void apply_helmholtz_inverse(std::vector<Field>& comps, double alpha, double scale) {
  const double a2 = alpha * alpha;
  for (auto& c : comps)
    kern::multiply_symbol(c.grid(), [a2, scale](double k2) { return scale / (1.0 + a2 * k2); }, c.modes(), c.modes());
}

/// Spectral Div(grad d^T grad d) from physical director gradients.
std::vector<Field> elastic_stress_spectral(const Grid& g, const std::vector<Field>& grad_d, bool dealias) {
  const int dim = g.dim();
  std::vector<Field> tensor(static_cast<std::size_t>(dim * dim), Field(g));
  auto out = mutable_views(tensor);
  kern::elastic_tensor(const_views(grad_d), dim, out);
  std::vector<Field> spec(static_cast<std::size_t>(dim * dim));
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      spec[static_cast<std::size_t>(i * dim + j)] = forward(tensor[static_cast<std::size_t>(i * dim + j)], dealias);
      if (j != i) spec[static_cast<std::size_t>(j * dim + i)] = spec[static_cast<std::size_t>(i * dim + j)];
    }
  return divergence_rows(g, spec);
}

/// Spectral alpha^2 H^{-1} Div T_lans from physical velocity gradients.
std::vector<Field> lans_spectral(const Grid& g, const std::vector<Field>& grad_u, double alpha, bool dealias) {
  const int dim = g.dim();
  std::vector<Field> tensor(static_cast<std::size_t>(dim * dim), Field(g));
  auto out = mutable_views(tensor);
  kern::lans_tensor(const_views(grad_u), dim, out);
  std::vector<Field> spec;
  for (const auto& t : tensor) spec.push_back(forward(t, dealias));
  std::vector<Field> div = divergence_rows(g, spec);
  apply_helmholtz_inverse(div, alpha, alpha * alpha);
  return div;
}

std::vector<Field> advect_spectral(const std::vector<Field>& u_phys, const std::vector<Field>& grad_w, int comps,
                                   bool dealias) {
  const Grid& g = u_phys.front().grid();
  std::vector<Field> prod(static_cast<std::size_t>(comps), Field(g));
  auto out = mutable_views(prod);
  kern::advect(const_views(u_phys), const_views(grad_w), out);
  std::vector<Field> spec;
  for (const auto& p : prod) spec.push_back(forward(p, dealias));
  return spec;
}

void leray_in_place(const Grid& g, std::vector<Field>& comps) {
  std::vector<std::span<cplx>> views;
  for (auto& c : comps) views.push_back(c.modes());
  kern::leray_project(g, views);
}

struct ExplicitTerms {
  std::vector<Field> momentum;  // spectral
  std::vector<Field> director;  // spectral
};

/// Evaluates both explicit right-hand sides, sharing the physical gradients.
ExplicitTerms explicit_terms(const VectorField& u, const VectorField& d, const SimParams& p, bool want_momentum,
                             bool want_director) {
  const Grid& g = u.grid();
  const int dim = g.dim();
  const std::vector<Field> u_phys = physical_components(u);
  const std::vector<Field> grad_d = physical_gradient(d);
  ExplicitTerms terms;

  if (want_momentum) {
    const std::vector<Field> grad_u = physical_gradient(u);
    std::vector<Field> mom = advect_spectral(u_phys, grad_u, dim, p.dealias);
    for (auto& m : mom) m *= -1.0;
    if (p.lambda != 0.0) {
      std::vector<Field> el = elastic_stress_spectral(g, grad_d, p.dealias);
      if (p.model == Model::lc_alpha) apply_helmholtz_inverse(el, p.alpha, 1.0);
      for (int a = 0; a < dim; ++a) mom[static_cast<std::size_t>(a)].axpy(-p.lambda, el[static_cast<std::size_t>(a)]);
    }
    if (p.model == Model::lc_alpha && p.alpha > 0.0) {
      const std::vector<Field> lans = lans_spectral(g, grad_u, p.alpha, p.dealias);
      for (int a = 0; a < dim; ++a) mom[static_cast<std::size_t>(a)] -= lans[static_cast<std::size_t>(a)];
    }
    leray_in_place(g, mom);
    terms.momentum = std::move(mom);
  }

  if (want_director) {
    const std::vector<Field> d_phys = physical_components(d);
    std::vector<Field> adv(static_cast<std::size_t>(d.size()), Field(g));
    std::vector<Field> gl(static_cast<std::size_t>(d.size()), Field(g));
    auto adv_out = mutable_views(adv);
    auto gl_out = mutable_views(gl);
    kern::advect(const_views(u_phys), const_views(grad_d), adv_out);
    kern::gl_force(const_views(d_phys), 1.0 / (p.epsilon * p.epsilon), gl_out);
    std::vector<Field> dir;
    for (std::size_t a = 0; a < adv.size(); ++a) {
      adv[a] *= -1.0;
      adv[a].axpy(-p.gamma, gl[a]);
      dir.push_back(forward(adv[a], p.dealias));
    }
    terms.director = std::move(dir);
  }
  return terms;
}

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon: must be positive");
}

VectorField finish(std::vector<Field> spectral, Representation rep) {
  return as_representation(VectorField(std::move(spectral)), rep);
}

void check_state(const SimState& s) {
  require_same_grid(s.u.grid(), s.d.grid(), "state");
  if (s.u.size() != s.u.grid().dim()) throw std::invalid_argument("state: velocity must have dim components");
  if (s.d.size() != s.d.grid().dim()) throw std::invalid_argument("state: director must have dim components");
}

bool all_finite(const VectorField& v) {
  for (const auto& c : v)
    for (double x : c.values())
      if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

VectorField gl_force(const VectorField& d, double epsilon, bool dealias) {
  check_epsilon(epsilon);
  std::vector<Field> phys = physical_components(d);
  std::vector<Field> out(phys.size(), Field(d.grid()));
  auto views = mutable_views(out);
  kern::gl_force(const_views(phys), 1.0 / (epsilon * epsilon), views);
  if (dealias)
    for (auto& f : out) f = forward(f, true);
  return finish(std::move(out), d.representation());
}

double gl_potential(const VectorField& d, double epsilon) {
  check_epsilon(epsilon);
  const std::vector<Field> phys = physical_components(d);
  std::vector<double> r2(d.grid().size());
  kern::magnitude_squared(const_views(phys), r2);
  const double s = kern::blocked_sum(r2.size(), [&](std::size_t i) {
    const double e = r2[i] - 1.0;
    return e * e;
  });
  return d.grid().cell_weight() * s / (4.0 * epsilon * epsilon);
}

VectorField advect(const VectorField& u, const VectorField& w, bool dealias) {
  require_same_grid(u.grid(), w.grid(), "advect");
  if (u.size() != u.grid().dim()) throw std::invalid_argument("advect: velocity must have dim components");
  std::vector<Field> spec = advect_spectral(physical_components(u), physical_gradient(w), w.size(), dealias);
  return finish(std::move(spec), w.representation());
}

VectorField elastic_stress_div(const VectorField& d, bool dealias) {
  if (d.size() != d.grid().dim()) throw std::invalid_argument("elastic_stress_div: director must have dim components");
  return finish(elastic_stress_spectral(d.grid(), physical_gradient(d), dealias), d.representation());
}

VectorField lans_correction(const VectorField& u, double alpha, bool dealias) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha: must be non-negative");
  if (u.size() != u.grid().dim()) throw std::invalid_argument("lans_correction: velocity must have dim components");
  if (alpha == 0.0) return VectorField(u.grid(), u.size(), u.representation());
  return finish(lans_spectral(u.grid(), physical_gradient(u), alpha, dealias), u.representation());
}

VectorField momentum_rhs(const SimState& state, const SimParams& params) {
  check_state(state);
  ExplicitTerms t = explicit_terms(state.u, state.d, params, true, false);
  VectorField out = finish(std::move(t.momentum), state.u.representation());
  if (state.u.is_physical() && !all_finite(out)) throw BlowUpError("momentum_rhs: non-finite value", state.t);
  return out;
}

VectorField director_rhs(const SimState& state, const SimParams& params) {
  check_state(state);
  ExplicitTerms t = explicit_terms(state.u, state.d, params, false, true);
  VectorField out = finish(std::move(t.director), state.d.representation());
  if (state.d.is_physical() && !all_finite(out)) throw BlowUpError("director_rhs: non-finite value", state.t);
  return out;
}

double viscous_symbol(const SimParams& params, double k2) {
  return params.model == Model::lc ? 0.5 * params.nu * k2 : params.nu * k2;
}

namespace {

/// (1 + c_impl mu) x_new = (1 - c_expl mu) x + dt * rhs, mode by mode.
template <class Mu>
void implicit_update(const Field& x, const Field& rhs, double dt, double c_impl, double c_expl, Mu&& mu,
                     Field& out) {
  const Grid& g = x.grid();
  auto xm = x.modes();
  auto rm = rhs.modes();
  auto om = out.modes();
  kern::for_each_mode(g, [&](std::size_t m, double kx, double ky, double kz, int) {
    const double s = mu(kx * kx + ky * ky + kz * kz);
    om[m] = ((1.0 - c_expl * s) * xm[m] + dt * rm[m]) / (1.0 + c_impl * s);
  });
}

}  // namespace

SimState step(const SimState& state, const SimParams& params) {
  check_state(state);
  params.validate();
  const Grid& g = state.u.grid();
  const int dim = g.dim();
  const double dt = params.dt;
  const VectorField u0 = to_spectral(state.u);
  const VectorField d0 = to_spectral(state.d);
  const auto mu_u = [&](double k2) { return viscous_symbol(params, k2); };
  const auto mu_d = [&](double k2) { return params.gamma * k2; };

  std::vector<Field> u_new(static_cast<std::size_t>(dim), Field(g, Representation::spectral));
  std::vector<Field> d_new(static_cast<std::size_t>(dim), Field(g, Representation::spectral));
  const ExplicitTerms e0 = explicit_terms(u0, d0, params, true, true);

  if (params.integrator == Integrator::imex1) {
    for (int a = 0; a < dim; ++a) {
      const auto i = static_cast<std::size_t>(a);
      implicit_update(u0[a], e0.momentum[i], dt, dt, 0.0, mu_u, u_new[i]);
      implicit_update(d0[a], e0.director[i], dt, dt, 0.0, mu_d, d_new[i]);
    }
  } else {
    // Explicit trapezoid (Heun) for the explicit part, Crank-Nicolson for
    // the diffusion: second order and self-starting.
    std::vector<Field> u1(static_cast<std::size_t>(dim), Field(g, Representation::spectral));
    std::vector<Field> d1(static_cast<std::size_t>(dim), Field(g, Representation::spectral));
    for (int a = 0; a < dim; ++a) {
      const auto i = static_cast<std::size_t>(a);
      implicit_update(u0[a], e0.momentum[i], dt, 0.5 * dt, 0.5 * dt, mu_u, u1[i]);
      implicit_update(d0[a], e0.director[i], dt, 0.5 * dt, 0.5 * dt, mu_d, d1[i]);
    }
    leray_in_place(g, u1);
    const ExplicitTerms e1 =
        explicit_terms(VectorField(std::move(u1)), VectorField(std::move(d1)), params, true, true);
    for (int a = 0; a < dim; ++a) {
      const auto i = static_cast<std::size_t>(a);
      Field mom = e0.momentum[i];
      mom += e1.momentum[i];
      mom *= 0.5;
      Field dir = e0.director[i];
      dir += e1.director[i];
      dir *= 0.5;
      implicit_update(u0[a], mom, dt, 0.5 * dt, 0.5 * dt, mu_u, u_new[i]);
      implicit_update(d0[a], dir, dt, 0.5 * dt, 0.5 * dt, mu_d, d_new[i]);
    }
  }
  leray_in_place(g, u_new);

  SimState next;
  next.t = state.t + dt;
  next.u = as_representation(VectorField(std::move(u_new)), state.u.representation());
  next.d = as_representation(VectorField(std::move(d_new)), state.d.representation());
  const bool finite = next.u.is_physical() ? all_finite(next.u) && all_finite(next.d)
                                           : all_finite(to_physical(next.u)) && all_finite(to_physical(next.d));
  if (!finite) throw BlowUpError("step: non-finite value", next.t);
  return next;
}

}  // namespace nlc
