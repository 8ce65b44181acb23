#pragma once

#include <complex>
#include <cstddef>
#include <new>
#include <span>
#include <utility>
#include <vector>

#include "nlc/grid.hpp"

namespace nlc {

using cplx = std::complex<double>;

/// Cache-line aligned allocation.
template <class T>
struct AlignedAllocator {
  using value_type = T;
  static constexpr std::align_val_t alignment{64};

  AlignedAllocator() = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U>&) {}

  T* allocate(std::size_t count) { return static_cast<T*>(::operator new(count * sizeof(T), alignment)); }
  void deallocate(T* p, std::size_t) { ::operator delete(p, alignment); }

  /// Default-initializes: sized buffers are not zero-filled.
  template <class U, class... Args>
  void construct(U* p, Args&&... args) {
    if constexpr (sizeof...(Args) == 0)
      ::new (static_cast<void*>(p)) U;
    else
      ::new (static_cast<void*>(p)) U(std::forward<Args>(args)...);
  }

  template <class U>
  bool operator==(const AlignedAllocator<U>&) const { return true; }
};

using RealBuffer = std::vector<double, AlignedAllocator<double>>;
using ComplexBuffer = std::vector<cplx, AlignedAllocator<cplx>>;

enum class Representation { physical, spectral };

/// Scalar field on a periodic grid, held either as real samples or as
/// half-spectrum Fourier coefficients.
///
/// Spectral coefficients are normalized so that the k = 0 mode equals the
/// mean value of the field: f(x) = sum_k c_k exp(i k.x).
class Field {
public:
  Field() = default;
  /// Zero field in the requested representation.
  explicit Field(const Grid& grid, Representation rep = Representation::physical);

  static Field from_values(const Grid& grid, RealBuffer values);
  static Field from_values(const Grid& grid, std::span<const double> values);
  static Field from_modes(const Grid& grid, ComplexBuffer modes);
  static Field from_modes(const Grid& grid, std::span<const cplx> modes);
  static Field constant(const Grid& grid, double value);

  /// Samples f(x, y[, z]) at every grid point.
  template <class Fn>
  static Field sample(const Grid& grid, Fn&& fn);

  const Grid& grid() const { return grid_; }
  Representation representation() const { return rep_; }
  bool is_physical() const { return rep_ == Representation::physical; }
  bool is_spectral() const { return rep_ == Representation::spectral; }

  /// Physical samples; throws std::logic_error in spectral representation.
  std::span<double> values();
  std::span<const double> values() const;
  /// Half-spectrum coefficients; throws std::logic_error in physical representation.
  std::span<cplx> modes();
  std::span<const cplx> modes() const;

  Field& operator+=(const Field& o);
  Field& operator-=(const Field& o);
  Field& operator*=(double s);
  /// this += s * o
  Field& axpy(double s, const Field& o);

private:
  Grid grid_;
  Representation rep_ = Representation::physical;
  RealBuffer values_;
  ComplexBuffer modes_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double s, Field a);

/// A fixed number of scalar components sharing one grid and representation.
class VectorField {
public:
  VectorField() = default;
  VectorField(const Grid& grid, int components, Representation rep = Representation::physical);
  /// Throws std::invalid_argument on grid or representation mismatch.
  explicit VectorField(std::vector<Field> components);

  template <class Fn>
  static VectorField sample(const Grid& grid, int components, Fn&& fn);

  int size() const { return static_cast<int>(components_.size()); }
  const Grid& grid() const;
  Representation representation() const;
  bool is_physical() const { return representation() == Representation::physical; }
  bool is_spectral() const { return representation() == Representation::spectral; }

  Field& operator[](int i) { return components_[static_cast<std::size_t>(i)]; }
  const Field& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }

  auto begin() { return components_.begin(); }
  auto end() { return components_.end(); }
  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(double s);
  VectorField& axpy(double s, const VectorField& o);

private:
  std::vector<Field> components_;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double s, VectorField a);

/// Square matrix of fields, entry (a, b) stored at a * rows + b.
class TensorField {
public:
  TensorField() = default;
  TensorField(const Grid& grid, int rows, Representation rep = Representation::physical);

  int rows() const { return rows_; }
  const Grid& grid() const { return entries_.front().grid(); }
  Representation representation() const { return entries_.front().representation(); }

  Field& operator()(int a, int b) { return entries_[static_cast<std::size_t>(a * rows_ + b)]; }
  const Field& operator()(int a, int b) const { return entries_[static_cast<std::size_t>(a * rows_ + b)]; }

  /// Sum of diagonal entries.
  Field trace() const;

private:
  int rows_ = 0;
  std::vector<Field> entries_;
};

/// Throws std::invalid_argument if the grids differ; `what` names the operation.
void require_same_grid(const Grid& a, const Grid& b, const char* what);

// ---------------------------------------------------------------------------

template <class Fn>
Field Field::sample(const Grid& grid, Fn&& fn) {
  Field f(grid);
  auto v = f.values();
  const int n = grid.n();
  if (grid.dim() == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        v[static_cast<std::size_t>(i) * n + j] = fn(grid.coordinate(i), grid.coordinate(j), 0.0);
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          v[(static_cast<std::size_t>(i) * n + j) * n + k] =
              fn(grid.coordinate(i), grid.coordinate(j), grid.coordinate(k));
  }
  return f;
}

template <class Fn>
VectorField VectorField::sample(const Grid& grid, int components, Fn&& fn) {
  std::vector<Field> comps;
  comps.reserve(static_cast<std::size_t>(components));
  for (int c = 0; c < components; ++c)
    comps.push_back(Field::sample(grid, [&](double x, double y, double z) { return fn(c, x, y, z); }));
  return VectorField(std::move(comps));
}

}  // namespace nlc
