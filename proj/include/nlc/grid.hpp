#pragma once

#include <cstddef>
#include <numbers>

namespace nlc {

/// Uniform periodic box with the same number of points along every axis.
///
/// Physical samples are stored row-major over (x, y[, z]). The spectral layout
/// is the real-to-complex half spectrum: the last axis keeps only the
/// non-negative wavenumbers 0..n/2.
class Grid {
public:
  Grid() = default;

  int dim() const { return dim_; }
  int n() const { return n_; }
  double length() const { return length_; }

  /// Number of physical sample points, n^dim.
  std::size_t size() const {
    std::size_t s = 1;
    for (int a = 0; a < dim_; ++a) s *= static_cast<std::size_t>(n_);
    return s;
  }

  int half() const { return n_ / 2 + 1; }

  /// Number of stored complex modes in the half spectrum.
  std::size_t spectral_size() const { return size() / static_cast<std::size_t>(n_) * static_cast<std::size_t>(half()); }

  double spacing() const { return length_ / n_; }
  double volume() const;
  /// Quadrature weight of one sample, (L/n)^dim.
  double cell_weight() const;

  /// Fundamental wavenumber 2*pi/L.
  double k0() const { return 2.0 * std::numbers::pi / length_; }

  /// Signed integer wavenumber of a full-axis index, in {-n/2+1, ..., n/2}.
  int wave_index(int i) const { return i <= n_ / 2 ? i : i - n_; }

  /// Physical wavenumber used by derivative multipliers. The Nyquist index is
  /// mapped to zero so that odd derivatives stay real-valued.
  double derivative_k(int signed_index) const {
    return (signed_index == n_ / 2) ? 0.0 : k0() * signed_index;
  }

  /// Coordinate of sample i along any axis.
  double coordinate(int i) const { return spacing() * i; }

  friend bool operator==(const Grid&, const Grid&) = default;

private:
  friend Grid make_grid(int dim, int n, double length);
  Grid(int dim, int n, double length) : dim_(dim), n_(n), length_(length) {}

  int dim_ = 2;
  int n_ = 8;
  double length_ = 2.0 * std::numbers::pi;
};

/// Throws std::invalid_argument unless dim is 2 or 3, n is even and >= 8,
/// and length is positive.
Grid make_grid(int dim, int n, double length = 2.0 * std::numbers::pi);

}  // namespace nlc
