#pragma once

// Brute-force reference evaluations that avoid the FFT path: direct DFTs,
// analytic gradients and pointwise quadrature. Only meant for small grids.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "nlc/dynamics.hpp"
#include "nlc/operators.hpp"

namespace nlc::oracle {

/// Grid indices of sample p along each axis.
inline std::array<int, 3> indices(const Grid& g, std::size_t p) {
  const auto n = static_cast<std::size_t>(g.n());
  if (g.dim() == 2) return {static_cast<int>(p / n), static_cast<int>(p % n), 0};
  return {static_cast<int>(p / (n * n)), static_cast<int>((p / n) % n), static_cast<int>(p % n)};
}

/// Applies a Fourier multiplier m(kx, ky, kz) (physical wavenumbers, Nyquist
/// mapped to 0) to physical samples by a direct O(N^2) DFT.
template <class Multiplier>
Field apply_multiplier(const Field& f, Multiplier&& m) {
  using cplx = std::complex<double>;
  const Grid& g = f.grid();
  const int n = g.n();
  const int dim = g.dim();
  const std::size_t N = g.size();
  const auto v = f.values();
  std::vector<cplx> coef(N);
  for (std::size_t q = 0; q < N; ++q) {
    const auto kq = indices(g, q);
    cplx s = 0.0;
    for (std::size_t p = 0; p < N; ++p) {
      const auto xp = indices(g, p);
      double ph = 0.0;
      for (int a = 0; a < dim; ++a) ph += g.wave_index(kq[static_cast<std::size_t>(a)]) * xp[static_cast<std::size_t>(a)];
      s += v[p] * std::exp(cplx(0, -2 * std::numbers::pi * ph / n));
    }
    const double kx = g.derivative_k(g.wave_index(kq[0]));
    const double ky = g.derivative_k(g.wave_index(kq[1]));
    const double kz = dim == 3 ? g.derivative_k(g.wave_index(kq[2])) : 0.0;
    coef[q] = m(kx, ky, kz) * s / static_cast<double>(N);
  }
  Field out(g);
  for (std::size_t p = 0; p < N; ++p) {
    const auto xp = indices(g, p);
    cplx s = 0.0;
    for (std::size_t q = 0; q < N; ++q) {
      const auto kq = indices(g, q);
      double ph = 0.0;
      for (int a = 0; a < dim; ++a) ph += g.wave_index(kq[static_cast<std::size_t>(a)]) * xp[static_cast<std::size_t>(a)];
      s += coef[q] * std::exp(cplx(0, 2 * std::numbers::pi * ph / n));
    }
    out.values()[p] = s.real();
  }
  return out;
}

/// Velocity gradient G(a, b) = d_b u_a of u = (sin x cos y, -cos x sin y).
inline double taylor_green_gradient(int a, int b, double x, double y) {
  if (a == 0 && b == 0) return std::cos(x) * std::cos(y);
  if (a == 0 && b == 1) return -std::sin(x) * std::sin(y);
  if (a == 1 && b == 0) return std::sin(x) * std::sin(y);
  return -std::cos(x) * std::cos(y);
}

/// alpha^2 (1 - alpha^2 Lap)^{-1} Div[G G^T + G G - G^T G] for the 2D
/// Taylor-Green velocity: analytic gradient, pointwise products, and one
/// direct DFT per tensor entry carrying i k_b alpha^2 / (1 + alpha^2 |k|^2).
inline VectorField lans_taylor_green(const Grid& g, double alpha) {
  using cplx = std::complex<double>;
  const auto G = taylor_green_gradient;
  std::vector<Field> out(2, Field(g));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Field t = Field::sample(g, [&](double x, double y, double) {
        double s = 0.0;
        for (int c = 0; c < 2; ++c)
          s += G(a, c, x, y) * G(b, c, x, y) + G(a, c, x, y) * G(c, b, x, y) - G(c, a, x, y) * G(c, b, x, y);
        return s;
      });
      out[static_cast<std::size_t>(a)] += apply_multiplier(t, [&](double kx, double ky, double) {
        const double kb = b == 0 ? kx : ky;
        return cplx(0.0, kb) * (alpha * alpha / (1.0 + alpha * alpha * (kx * kx + ky * ky)));
      });
    }
  return VectorField(std::move(out));
}

/// (|u|^2 + 2 alpha^2 |Def u|^2) / 2 for the 2D Taylor-Green velocity by
/// pointwise quadrature of the analytic integrand.
inline double averaged_energy_taylor_green(const Grid& g, double alpha) {
  const auto G = taylor_green_gradient;
  double s = 0.0;
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) {
      const double x = g.coordinate(i), y = g.coordinate(j);
      const double u1 = std::sin(x) * std::cos(y), u2 = -std::cos(x) * std::sin(y);
      double def2 = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const double e = 0.5 * (G(a, b, x, y) + G(b, a, x, y));
          def2 += e * e;
        }
      s += u1 * u1 + u2 * u2 + 2.0 * alpha * alpha * def2;
    }
  return 0.5 * s * g.cell_weight();
}

/// Relative mismatch between the central difference of gl_potential along
/// `dd` and <f(d), dd> (undealiased force), step h.
inline double gl_gradient_mismatch(const VectorField& d, const VectorField& dd, double epsilon, double h = 1e-6) {
  VectorField dp = d;
  dp.axpy(h, dd);
  VectorField dm = d;
  dm.axpy(-h, dd);
  const double fd = (gl_potential(dp, epsilon) - gl_potential(dm, epsilon)) / (2 * h);
  const double exact = l2_inner(gl_force(d, epsilon, false), dd);
  return std::abs(fd - exact) / std::abs(exact);
}

}  // namespace nlc::oracle
