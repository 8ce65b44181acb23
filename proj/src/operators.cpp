#include "nlc/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "nlc/kernels.hpp"
#include "nlc/transform.hpp"

namespace nlc {

namespace kern = kernels::omp;

namespace {

Field spectral_derivative(const Field& spec, int axis) {
  Field out(spec.grid(), Representation::spectral);
  kern::derivative(spec.grid(), axis, spec.modes(), out.modes());
  return out;
}

template <class Symbol>
Field apply_symbol(const Field& f, Symbol&& symbol) {
  Field spec = to_spectral(f);
  kern::multiply_symbol(spec.grid(), symbol, spec.modes(), spec.modes());
  return as_representation(spec, f.representation());
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("helmholtz: alpha must be non-negative");
}

}  // namespace

VectorField gradient(const Field& f) {
  const Field spec = to_spectral(f);
  std::vector<Field> comps;
  for (int a = 0; a < f.grid().dim(); ++a)
    comps.push_back(as_representation(spectral_derivative(spec, a), f.representation()));
  return VectorField(std::move(comps));
}

TensorField jacobian(const VectorField& v) {
  const int dim = v.grid().dim();
  if (v.size() != dim) throw std::invalid_argument("jacobian: expected dim components");
  TensorField j(v.grid(), dim, v.representation());
  for (int a = 0; a < dim; ++a) {
    const Field spec = to_spectral(v[a]);
    for (int b = 0; b < dim; ++b) j(a, b) = as_representation(spectral_derivative(spec, b), v.representation());
  }
  return j;
}

Field divergence(const VectorField& v) {
  const Grid& g = v.grid();
  if (v.size() != g.dim()) throw std::invalid_argument("divergence: expected dim components");
  Field acc(g, Representation::spectral);
  Field tmp(g, Representation::spectral);
  for (int a = 0; a < g.dim(); ++a) {
    const Field spec = to_spectral(v[a]);
    kern::derivative(g, a, spec.modes(), tmp.modes());
    acc += tmp;
  }
  return as_representation(acc, v.representation());
}

VectorField divergence(const TensorField& t) {
  const Grid& g = t.grid();
  std::vector<Field> comps;
  Field tmp(g, Representation::spectral);
  for (int a = 0; a < t.rows(); ++a) {
    Field acc(g, Representation::spectral);
    for (int b = 0; b < t.rows(); ++b) {
      require_same_grid(g, t(a, b).grid(), "divergence");
      const Field spec = to_spectral(t(a, b));
      kern::derivative(g, b, spec.modes(), tmp.modes());
      acc += tmp;
    }
    comps.push_back(as_representation(acc, t.representation()));
  }
  return VectorField(std::move(comps));
}

Field laplacian(const Field& f) {
  return apply_symbol(f, [](double k2) { return -k2; });
}

VectorField laplacian(const VectorField& v) {
  std::vector<Field> comps;
  for (const auto& c : v) comps.push_back(laplacian(c));
  return VectorField(std::move(comps));
}

VectorField curl(const VectorField& v) {
  const Grid& g = v.grid();
  if (g.dim() != 3 || v.size() != 3) throw std::invalid_argument("curl: requires a 3D vector field");
  const TensorField j = jacobian(to_spectral(v));
  std::vector<Field> comps;
  comps.push_back(j(2, 1) - j(1, 2));
  comps.push_back(j(0, 2) - j(2, 0));
  comps.push_back(j(1, 0) - j(0, 1));
  return as_representation(VectorField(std::move(comps)), v.representation());
}

VectorField leray_project(const VectorField& v) {
  const Grid& g = v.grid();
  if (v.size() != g.dim()) throw std::invalid_argument("leray_project: expected dim components");
  VectorField spec = to_spectral(v);
  std::vector<std::span<cplx>> views;
  for (auto& c : spec) {
    require_same_grid(g, c.grid(), "leray_project");
    views.push_back(c.modes());
  }
  kern::leray_project(g, views);
  return as_representation(spec, v.representation());
}

Field helmholtz_inverse(const Field& f, double alpha) {
  check_alpha(alpha);
  const double a2 = alpha * alpha;
  return apply_symbol(f, [a2](double k2) { return 1.0 / (1.0 + a2 * k2); });
}

VectorField helmholtz_inverse(const VectorField& v, double alpha) {
  std::vector<Field> comps;
  for (const auto& c : v) comps.push_back(helmholtz_inverse(c, alpha));
  return VectorField(std::move(comps));
}

Field helmholtz(const Field& f, double alpha) {
  check_alpha(alpha);
  const double a2 = alpha * alpha;
  return apply_symbol(f, [a2](double k2) { return 1.0 + a2 * k2; });
}

VectorField helmholtz(const VectorField& v, double alpha) {
  std::vector<Field> comps;
  for (const auto& c : v) comps.push_back(helmholtz(c, alpha));
  return VectorField(std::move(comps));
}

Field dealias(const Field& f) {
  Field spec = to_spectral(f);
  kern::truncate_two_thirds(spec.grid(), spec.modes());
  return as_representation(spec, f.representation());
}

VectorField dealias(const VectorField& v) {
  std::vector<Field> comps;
  for (const auto& c : v) comps.push_back(dealias(c));
  return VectorField(std::move(comps));
}

TensorField def_tensor(const VectorField& u) {
  const TensorField j = jacobian(u);
  const int dim = j.rows();
  TensorField d(u.grid(), dim, u.representation());
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      Field s = j(a, b) + j(b, a);
      s *= 0.5;
      d(a, b) = std::move(s);
    }
  return d;
}

double integrate(const Field& f) {
  if (f.is_spectral()) return f.grid().volume() * f.modes()[0].real();
  return f.grid().cell_weight() * kern::sum(f.values());
}

double lp_norm(const Field& f, double p) {
  const Grid& g = f.grid();
  if (p == 2.0 && f.is_spectral())
    return std::sqrt(g.volume() * kern::spectral_sum(g, f.modes(), [](double) { return 1.0; }));
  if (p != 2.0 && p != 4.0 && p != 8.0 && p != infinity_norm)
    throw std::invalid_argument("lp_norm: unsupported p (use 2, 4, 8 or infinity)");
  if (!f.is_physical()) throw std::invalid_argument("lp_norm: physical representation required for p != 2");
  if (p == infinity_norm) return kern::max_abs(f.values());
  return std::pow(g.cell_weight() * kern::sum_abs_pow(f.values(), p), 1.0 / p);
}

double lp_norm(const VectorField& v, double p) {
  const Grid& g = v.grid();
  if (p == 2.0) {
    double s = 0.0;
    for (const auto& c : v) {
      const double n = lp_norm(c, 2.0);
      s += n * n;
    }
    return std::sqrt(s);
  }
  if (p != 4.0 && p != 8.0 && p != infinity_norm)
    throw std::invalid_argument("lp_norm: unsupported p (use 2, 4, 8 or infinity)");
  if (!v.is_physical()) throw std::invalid_argument("lp_norm: physical representation required for p != 2");
  std::vector<std::span<const double>> views;
  for (const auto& c : v) views.push_back(c.values());
  std::vector<double> mag2(g.size());
  kern::magnitude_squared(views, mag2);
  if (p == infinity_norm) return std::sqrt(kern::max_abs(mag2));
  return std::pow(g.cell_weight() * kern::sum_abs_pow(mag2, p / 2.0), 1.0 / p);
}

double l2_inner(const Field& a, const Field& b) {
  require_same_grid(a.grid(), b.grid(), "l2_inner");
  const Grid& g = a.grid();
  if (a.is_physical() && b.is_physical()) {
    auto x = a.values();
    auto y = b.values();
    return g.cell_weight() * kern::blocked_sum(x.size(), [&](std::size_t i) { return x[i] * y[i]; });
  }
  const Field sa = to_spectral(a);
  const Field sb = to_spectral(b);
  return g.volume() * kern::spectral_inner(g, sa.modes(), sb.modes());
}

double l2_inner(const VectorField& a, const VectorField& b) {
  if (a.size() != b.size()) throw std::invalid_argument("l2_inner: component count mismatch");
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i) s += l2_inner(a[i], b[i]);
  return s;
}

double hs_seminorm(const Field& f, int s) {
  if (s < 0) throw std::invalid_argument("hs_seminorm: order must be non-negative");
  const Field spec = to_spectral(f);
  const Grid& g = f.grid();
  return std::sqrt(g.volume() * kern::spectral_sum(g, spec.modes(), [s](double k2) { return kernels::int_pow(k2, s); }));
}

double hs_seminorm(const VectorField& v, int s) {
  double acc = 0.0;
  for (const auto& c : v) {
    const double n = hs_seminorm(c, s);
    acc += n * n;
  }
  return std::sqrt(acc);
}

}  // namespace nlc
