#include "nlc/kernels.hpp"

namespace nlc::kernels::omp {

void derivative(const Grid& g, int axis, std::span<const cplx> in, std::span<cplx> out) {
  for_each_mode(g, [&](std::size_t m, double kx, double ky, double kz, int) {
    const double k = axis == 0 ? kx : axis == 1 ? ky : kz;
    out[m] = cplx(-k * in[m].imag(), k * in[m].real());
  });
}

void leray_project(const Grid& g, std::span<const std::span<cplx>> comps) {
  const std::size_t dim = static_cast<std::size_t>(g.dim());
  for_each_mode(g, [&](std::size_t m, double kx, double ky, double kz, int) {
    const double k[3] = {kx, ky, kz};
    const double k2 = kx * kx + ky * ky + kz * kz;
    if (k2 == 0.0) return;
    cplx kdotu = 0.0;
    for (std::size_t a = 0; a < dim; ++a) kdotu += k[a] * comps[a][m];
    for (std::size_t a = 0; a < dim; ++a) comps[a][m] -= (k[a] / k2) * kdotu;
  });
}

void truncate_two_thirds(const Grid& g, std::span<cplx> c) {
  // Compare signed integer wave indices: the Nyquist index maps to a zero
  // derivative wavenumber but is above the cutoff.
  const int n = g.n();
  const int h = g.half();
  const bool three = g.dim() == 3;
  auto cut = [n](int i) { return 3 * std::abs(i <= n / 2 ? i : i - n) > n; };
  const std::ptrdiff_t rows = three ? static_cast<std::ptrdiff_t>(n) * n : n;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    const int a = three ? static_cast<int>(r / n) : static_cast<int>(r);
    const bool row_cut = cut(a) || (three && cut(static_cast<int>(r % n)));
    std::size_t m = static_cast<std::size_t>(r) * static_cast<std::size_t>(h);
    for (int cidx = 0; cidx < h; ++cidx, ++m)
      if (row_cut || 3 * cidx > n) c[m] = 0.0;
  }
}

double spectral_inner(const Grid& g, std::span<const cplx> a, std::span<const cplx> b) {
  return spectral_reduce(g, [&](std::size_t m, double) {
    return a[m].real() * b[m].real() + a[m].imag() * b[m].imag();
  });
}

double sum(std::span<const double> v) {
  return blocked_sum(v.size(), [&](std::size_t i) { return v[i]; });
}

double sum_abs_pow(std::span<const double> v, double p) {
  return blocked_sum(v.size(), [&](std::size_t i) { return abs_pow(v[i], p); });
}

double max_abs(std::span<const double> v) {
  const std::size_t blocks = (v.size() + reduction_block - 1) / reduction_block;
  std::vector<double> partial(blocks, 0.0);
  const auto nb = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nb; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
    const std::size_t hi = std::min(v.size(), lo + reduction_block);
    double mx = 0.0;
    for (std::size_t i = lo; i < hi; ++i) mx = std::max(mx, std::abs(v[i]));
    partial[static_cast<std::size_t>(b)] = mx;
  }
  double mx = 0.0;
  for (double p : partial) mx = std::max(mx, p);
  return mx;
}

void magnitude_squared(ConstComponents v, std::span<double> out) {
  for_each_index(out.size(), [&](std::size_t i) {
    double s = 0.0;
    for (const auto& c : v) s += c[i] * c[i];
    out[i] = s;
  });
}

void gl_force(ConstComponents d, double inv_eps2, Components out) {
  const std::size_t count = d.front().size();
  for_each_index(count, [&](std::size_t i) {
    double r2 = 0.0;
    for (const auto& c : d) r2 += c[i] * c[i];
    const double factor = inv_eps2 * (r2 - 1.0);
    for (std::size_t a = 0; a < d.size(); ++a) out[a][i] = factor * d[a][i];
  });
}

namespace {

// Pointwise tensor kernels specialised on the dimension, reading through
// raw component pointers.

template <int D>
void advect_impl(ConstComponents u, ConstComponents grad, Components out) {
  const double* up[D];
  for (int j = 0; j < D; ++j) up[j] = u[static_cast<std::size_t>(j)].data();
  const std::size_t rows = out.size();
  const std::size_t count = u.front().size();
  for (std::size_t i = 0; i < rows; ++i) {
    const double* gp[D];
    for (int j = 0; j < D; ++j) gp[j] = grad[i * D + static_cast<std::size_t>(j)].data();
    double* op = out[i].data();
    for_each_index(count, [&](std::size_t p) {
      double s = 0.0;
      for (int j = 0; j < D; ++j) s += up[j][p] * gp[j][p];
      op[p] = s;
    });
  }
}

template <int D>
void elastic_impl(ConstComponents grad_d, Components out) {
  const std::size_t comps = grad_d.size() / D;
  std::vector<const double*> gp(grad_d.size());
  for (std::size_t q = 0; q < gp.size(); ++q) gp[q] = grad_d[q].data();
  double* op[D * D];
  for (int q = 0; q < D * D; ++q) op[q] = out[static_cast<std::size_t>(q)].data();
  for_each_index(grad_d.front().size(), [&](std::size_t p) {
    for (int i = 0; i < D; ++i)
      for (int j = i; j < D; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < comps; ++k) s += gp[k * D + static_cast<std::size_t>(i)][p] * gp[k * D + static_cast<std::size_t>(j)][p];
        op[i * D + j][p] = s;
        op[j * D + i][p] = s;
      }
  });
}

template <int D>
void lans_impl(ConstComponents grad_u, Components out) {
  const double* gp[D * D];
  double* op[D * D];
  for (int q = 0; q < D * D; ++q) {
    gp[q] = grad_u[static_cast<std::size_t>(q)].data();
    op[q] = out[static_cast<std::size_t>(q)].data();
  }
  for_each_index(grad_u.front().size(), [&](std::size_t p) {
    double G[D][D];
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b) G[a][b] = gp[a * D + b][p];
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b) {
        double s = 0.0;
        for (int c = 0; c < D; ++c) s += G[a][c] * G[b][c] + G[a][c] * G[c][b] - G[c][a] * G[c][b];
        op[a * D + b][p] = s;
      }
  });
}

}  // namespace

void advect(ConstComponents u, ConstComponents grad, Components out) {
  if (u.size() == 2)
    advect_impl<2>(u, grad, out);
  else
    advect_impl<3>(u, grad, out);
}

void elastic_tensor(ConstComponents grad_d, int dim, Components out) {
  if (dim == 2)
    elastic_impl<2>(grad_d, out);
  else
    elastic_impl<3>(grad_d, out);
}

void lans_tensor(ConstComponents grad_u, int dim, Components out) {
  if (dim == 2)
    lans_impl<2>(grad_u, out);
  else
    lans_impl<3>(grad_u, out);
}

}  // namespace nlc::kernels::omp
