#pragma once

// Data-parallel inner loops of the solver.
//
// Every kernel exists twice with identical signatures: nlc::kernels::omp is
// what the library calls, nlc::kernels::serial is a plain-loop reference kept
// for the equivalence tests and the benchmark. Elementwise kernels agree
// bitwise. Reductions in omp use fixed-size blocks whose partial sums are
// combined in block order, so their result does not depend on the thread
// count (it may differ from the serial sum in the last bits).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "nlc/field.hpp"

namespace nlc::kernels {

using Components = std::span<const std::span<double>>;
using ConstComponents = std::span<const std::span<const double>>;

/// Signed wave indices and Parseval multiplicity of one stored mode.
struct Mode {
  int kx, ky, kz;
  int multiplicity;
};

inline Mode decode_mode(const Grid& g, std::size_t m) {
  const int n = g.n();
  const int h = g.half();
  const int last = static_cast<int>(m % static_cast<std::size_t>(h));
  const int mult = (last == 0 || last == n / 2) ? 1 : 2;
  if (g.dim() == 2) {
    const int a = static_cast<int>(m / static_cast<std::size_t>(h));
    return {g.wave_index(a), last, 0, mult};
  }
  const std::size_t rest = m / static_cast<std::size_t>(h);
  const int b = static_cast<int>(rest % static_cast<std::size_t>(n));
  const int a = static_cast<int>(rest / static_cast<std::size_t>(n));
  return {g.wave_index(a), g.wave_index(b), last, mult};
}

/// Squared derivative wavenumber |k|^2 with Nyquist components dropped.
inline double derivative_k2(const Grid& g, const Mode& md) {
  const double kx = g.derivative_k(md.kx);
  const double ky = g.derivative_k(md.ky);
  const double kz = g.dim() == 3 ? g.derivative_k(md.kz) : 0.0;
  return kx * kx + ky * ky + kz * kz;
}

inline double derivative_k_axis(const Grid& g, const Mode& md, int axis) {
  return g.derivative_k(axis == 0 ? md.kx : axis == 1 ? md.ky : md.kz);
}

/// |x|^p with exact products for the small integer powers the norms use.
inline double abs_pow(double x, double p) {
  if (p == 2.0) return x * x;
  if (p == 4.0) return (x * x) * (x * x);
  if (p == 1.0) return std::abs(x);
  return std::pow(std::abs(x), p);
}

/// k2^s for a non-negative integer s.
inline double int_pow(double k2, int s) {
  double r = 1.0;
  for (int i = 0; i < s; ++i) r *= k2;
  return r;
}

namespace omp {

constexpr std::size_t reduction_block = 4096;

template <class Fn>
void for_each_index(std::size_t count, Fn&& fn) {
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < total; ++i) fn(static_cast<std::size_t>(i));
}

template <class Term>
double blocked_sum(std::size_t count, Term&& term) {
  const std::size_t blocks = (count + reduction_block - 1) / reduction_block;
  std::vector<double> partial(blocks, 0.0);
  const auto nb = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nb; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
    const std::size_t hi = std::min(count, lo + reduction_block);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    partial[static_cast<std::size_t>(b)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

/// Calls fn(m, kx, ky, kz, last) for every stored mode m, where kx, ky, kz
/// are derivative wavenumbers (Nyquist mapped to 0, kz = 0 in 2D) and `last`
/// is the unsigned index along the halved axis. Parallel over rows of the
/// halved axis.
template <class Fn>
void for_each_mode(const Grid& g, Fn&& fn) {
  const int n = g.n();
  const int h = g.half();
  const bool three = g.dim() == 3;
  std::vector<double> k(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) k[static_cast<std::size_t>(i)] = g.derivative_k(g.wave_index(i));
  const std::ptrdiff_t rows = three ? static_cast<std::ptrdiff_t>(n) * n : n;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    const std::size_t a = three ? static_cast<std::size_t>(r) / static_cast<std::size_t>(n) : static_cast<std::size_t>(r);
    const double kx = k[a];
    const double ky0 = three ? k[static_cast<std::size_t>(r) % static_cast<std::size_t>(n)] : 0.0;
    std::size_t m = static_cast<std::size_t>(r) * static_cast<std::size_t>(h);
    for (int c = 0; c < h; ++c, ++m) {
      const double kc = k[static_cast<std::size_t>(c)];
      if (three)
        fn(m, kx, ky0, kc, c);
      else
        fn(m, kx, kc, 0.0, c);
    }
  }
}

/// Sum over the full spectrum of term(m, |k|^2), each stored mode counted
/// with its Parseval multiplicity. Row partial sums are combined in row
/// order, so the result does not depend on the thread count.
template <class Term>
double spectral_reduce(const Grid& g, Term&& term) {
  const int n = g.n();
  const int h = g.half();
  const bool three = g.dim() == 3;
  std::vector<double> k(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) k[static_cast<std::size_t>(i)] = g.derivative_k(g.wave_index(i));
  const std::ptrdiff_t rows = three ? static_cast<std::ptrdiff_t>(n) * n : n;
  std::vector<double> partial(static_cast<std::size_t>(rows), 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    const std::size_t a = three ? static_cast<std::size_t>(r) / static_cast<std::size_t>(n) : static_cast<std::size_t>(r);
    const double kx = k[a];
    const double ky0 = three ? k[static_cast<std::size_t>(r) % static_cast<std::size_t>(n)] : 0.0;
    std::size_t m = static_cast<std::size_t>(r) * static_cast<std::size_t>(h);
    double s = 0.0;
    for (int c = 0; c < h; ++c, ++m) {
      const double kc = k[static_cast<std::size_t>(c)];
      const double k2 = three ? kx * kx + ky0 * ky0 + kc * kc : kx * kx + kc * kc;
      const double mult = (c == 0 || c == n / 2) ? 1.0 : 2.0;
      s += mult * term(m, k2);
    }
    partial[static_cast<std::size_t>(r)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

/// out = symbol(|k|^2) * in, mode by mode. `in` and `out` may alias.
template <class Symbol>
void multiply_symbol(const Grid& g, Symbol&& symbol, std::span<const cplx> in, std::span<cplx> out) {
  for_each_mode(g, [&](std::size_t m, double kx, double ky, double kz, int) {
    out[m] = symbol(kx * kx + ky * ky + kz * kz) * in[m];
  });
}

/// sum over the full spectrum of weight(|k|^2) |c_k|^2.
template <class Weight>
double spectral_sum(const Grid& g, std::span<const cplx> c, Weight&& weight) {
  return spectral_reduce(g, [&](std::size_t m, double k2) { return weight(k2) * std::norm(c[m]); });
}

void derivative(const Grid& g, int axis, std::span<const cplx> in, std::span<cplx> out);
void leray_project(const Grid& g, std::span<const std::span<cplx>> comps);
void truncate_two_thirds(const Grid& g, std::span<cplx> c);
/// Real part of sum over the full spectrum of a_k conj(b_k).
double spectral_inner(const Grid& g, std::span<const cplx> a, std::span<const cplx> b);

double sum(std::span<const double> v);
double sum_abs_pow(std::span<const double> v, double p);
double max_abs(std::span<const double> v);
/// out[i] = |v(x_i)|^2 summed over components.
void magnitude_squared(ConstComponents v, std::span<double> out);

/// out = inv_eps2 (|d|^2 - 1) d, pointwise.
void gl_force(ConstComponents d, double inv_eps2, Components out);
/// out_i = sum_j u_j grad(i, j), with grad(i, j) = d_j w_i stored at i * dim + j.
void advect(ConstComponents u, ConstComponents grad, Components out);
/// out(i, j) = sum_k d_i d^k d_j d^k, a dim x dim tensor stored row-major.
void elastic_tensor(ConstComponents grad_d, int dim, Components out);
/// out = G G^T + G G - G^T G with G(a, b) = d_b u_a, stored row-major.
void lans_tensor(ConstComponents grad_u, int dim, Components out);

}  // namespace omp

namespace serial {

template <class Symbol>
void multiply_symbol(const Grid& g, Symbol&& symbol, std::span<const cplx> in, std::span<cplx> out) {
  const std::size_t count = g.spectral_size();
  for (std::size_t m = 0; m < count; ++m) out[m] = symbol(derivative_k2(g, decode_mode(g, m))) * in[m];
}

template <class Weight>
double spectral_sum(const Grid& g, std::span<const cplx> c, Weight&& weight) {
  double s = 0.0;
  const std::size_t count = g.spectral_size();
  for (std::size_t m = 0; m < count; ++m) {
    const Mode md = decode_mode(g, m);
    s += md.multiplicity * weight(derivative_k2(g, md)) * std::norm(c[m]);
  }
  return s;
}

void derivative(const Grid& g, int axis, std::span<const cplx> in, std::span<cplx> out);
void leray_project(const Grid& g, std::span<const std::span<cplx>> comps);
void truncate_two_thirds(const Grid& g, std::span<cplx> c);
double spectral_inner(const Grid& g, std::span<const cplx> a, std::span<const cplx> b);

double sum(std::span<const double> v);
double sum_abs_pow(std::span<const double> v, double p);
double max_abs(std::span<const double> v);
void magnitude_squared(ConstComponents v, std::span<double> out);

void gl_force(ConstComponents d, double inv_eps2, Components out);
void advect(ConstComponents u, ConstComponents grad, Components out);
void elastic_tensor(ConstComponents grad_d, int dim, Components out);
void lans_tensor(ConstComponents grad_u, int dim, Components out);

}  // namespace serial

}  // namespace nlc::kernels
