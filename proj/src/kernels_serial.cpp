#include "nlc/kernels.hpp"

// Straight nested loops over the half spectrum; no shared helpers with the
// parallel versions beyond the wavenumber definitions.

namespace nlc::kernels::serial {

namespace {

template <class Fn>
void loop_modes(const Grid& g, Fn&& fn) {
  const int n = g.n();
  const int h = g.half();
  std::size_t m = 0;
  if (g.dim() == 2) {
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < h; ++c, ++m) fn(m, g.wave_index(a), c, 0);
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < h; ++c, ++m) fn(m, g.wave_index(a), g.wave_index(b), c);
  }
}

}  // namespace

void derivative(const Grid& g, int axis, std::span<const cplx> in, std::span<cplx> out) {
  loop_modes(g, [&](std::size_t m, int kx, int ky, int kz) {
    const int idx = axis == 0 ? kx : axis == 1 ? ky : kz;
    out[m] = cplx(0.0, g.derivative_k(idx)) * in[m];
  });
}

void leray_project(const Grid& g, std::span<const std::span<cplx>> comps) {
  const int dim = g.dim();
  loop_modes(g, [&](std::size_t m, int kx, int ky, int kz) {
    const double k[3] = {g.derivative_k(kx), g.derivative_k(ky), dim == 3 ? g.derivative_k(kz) : 0.0};
    double k2 = 0.0;
    for (int a = 0; a < dim; ++a) k2 += k[a] * k[a];
    if (k2 == 0.0) return;
    cplx kdotu = 0.0;
    for (int a = 0; a < dim; ++a) kdotu += k[a] * comps[static_cast<std::size_t>(a)][m];
    for (int a = 0; a < dim; ++a) comps[static_cast<std::size_t>(a)][m] -= (k[a] / k2) * kdotu;
  });
}

void truncate_two_thirds(const Grid& g, std::span<cplx> c) {
  const double cutoff = g.n() / 3.0;
  loop_modes(g, [&](std::size_t m, int kx, int ky, int kz) {
    if (std::abs(kx) > cutoff || std::abs(ky) > cutoff || std::abs(kz) > cutoff) c[m] = 0.0;
  });
}

double spectral_inner(const Grid& g, std::span<const cplx> a, std::span<const cplx> b) {
  double s = 0.0;
  const int nyq = g.n() / 2;
  loop_modes(g, [&](std::size_t m, int, int ky, int kz) {
    const int last = g.dim() == 2 ? ky : kz;
    const double w = (last == 0 || last == nyq) ? 1.0 : 2.0;
    s += w * std::real(a[m] * std::conj(b[m]));
  });
  return s;
}

double sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

double sum_abs_pow(std::span<const double> v, double p) {
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x), p);
  return s;
}

double max_abs(std::span<const double> v) {
  double mx = 0.0;
  for (double x : v) mx = std::max(mx, std::abs(x));
  return mx;
}

void magnitude_squared(ConstComponents v, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    double s = 0.0;
    for (const auto& c : v) s += c[i] * c[i];
    out[i] = s;
  }
}

void gl_force(ConstComponents d, double inv_eps2, Components out) {
  for (std::size_t i = 0; i < d.front().size(); ++i) {
    double r2 = 0.0;
    for (const auto& c : d) r2 += c[i] * c[i];
    for (std::size_t a = 0; a < d.size(); ++a) out[a][i] = inv_eps2 * (r2 - 1.0) * d[a][i];
  }
}

void advect(ConstComponents u, ConstComponents grad, Components out) {
  const std::size_t dim = u.size();
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t p = 0; p < u.front().size(); ++p) {
      double s = 0.0;
      for (std::size_t j = 0; j < dim; ++j) s += u[j][p] * grad[i * dim + j][p];
      out[i][p] = s;
    }
}

void elastic_tensor(ConstComponents grad_d, int dim, Components out) {
  const auto nd = static_cast<std::size_t>(dim);
  const std::size_t comps = grad_d.size() / nd;
  for (std::size_t i = 0; i < nd; ++i)
    for (std::size_t j = 0; j < nd; ++j)
      for (std::size_t p = 0; p < grad_d.front().size(); ++p) {
        double s = 0.0;
        for (std::size_t k = 0; k < comps; ++k) s += grad_d[k * nd + i][p] * grad_d[k * nd + j][p];
        out[i * nd + j][p] = s;
      }
}

void lans_tensor(ConstComponents grad_u, int dim, Components out) {
  const auto nd = static_cast<std::size_t>(dim);
  auto G = [&](std::size_t a, std::size_t b, std::size_t p) { return grad_u[a * nd + b][p]; };
  for (std::size_t a = 0; a < nd; ++a)
    for (std::size_t b = 0; b < nd; ++b)
      for (std::size_t p = 0; p < grad_u.front().size(); ++p) {
        double s = 0.0;
        for (std::size_t c = 0; c < nd; ++c) s += G(a, c, p) * G(b, c, p) + G(a, c, p) * G(c, b, p) - G(c, a, p) * G(c, b, p);
        out[a * nd + b][p] = s;
      }
}

}  // namespace nlc::kernels::serial
