#include "nlc/field.hpp"

#include <stdexcept>
#include <string>

#include "nlc/kernels.hpp"

namespace nlc {

namespace kern = kernels::omp;

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

Field::Field(const Grid& grid, Representation rep) : grid_(grid), rep_(rep) {
  if (rep == Representation::physical)
    values_.assign(grid.size(), 0.0);
  else
    modes_.assign(grid.spectral_size(), cplx(0.0));
}

Field Field::from_values(const Grid& grid, std::span<const double> values) {
  return from_values(grid, RealBuffer(values.begin(), values.end()));
}

Field Field::from_modes(const Grid& grid, std::span<const cplx> modes) {
  return from_modes(grid, ComplexBuffer(modes.begin(), modes.end()));
}

Field Field::from_values(const Grid& grid, RealBuffer values) {
  if (values.size() != grid.size()) throw std::invalid_argument("field: sample count does not match grid");
  Field f;
  f.grid_ = grid;
  f.rep_ = Representation::physical;
  f.values_ = std::move(values);
  return f;
}

Field Field::from_modes(const Grid& grid, ComplexBuffer modes) {
  if (modes.size() != grid.spectral_size()) throw std::invalid_argument("field: mode count does not match grid");
  Field f;
  f.grid_ = grid;
  f.rep_ = Representation::spectral;
  f.modes_ = std::move(modes);
  return f;
}

Field Field::constant(const Grid& grid, double value) {
  return from_values(grid, RealBuffer(grid.size(), value));
}

std::span<double> Field::values() {
  if (rep_ != Representation::physical) throw std::logic_error("field: values() on spectral field");
  return values_;
}

std::span<const double> Field::values() const {
  if (rep_ != Representation::physical) throw std::logic_error("field: values() on spectral field");
  return values_;
}

std::span<cplx> Field::modes() {
  if (rep_ != Representation::spectral) throw std::logic_error("field: modes() on physical field");
  return modes_;
}

std::span<const cplx> Field::modes() const {
  if (rep_ != Representation::spectral) throw std::logic_error("field: modes() on physical field");
  return modes_;
}

Field& Field::axpy(double s, const Field& o) {
  require_same_grid(grid_, o.grid_, "field arithmetic");
  if (rep_ != o.rep_) throw std::invalid_argument("field arithmetic: representation mismatch");
  if (rep_ == Representation::physical)
    kern::for_each_index(values_.size(), [&](std::size_t i) { values_[i] += s * o.values_[i]; });
  else
    kern::for_each_index(modes_.size(), [&](std::size_t i) { modes_[i] += s * o.modes_[i]; });
  return *this;
}

Field& Field::operator+=(const Field& o) { return axpy(1.0, o); }
Field& Field::operator-=(const Field& o) { return axpy(-1.0, o); }

Field& Field::operator*=(double s) {
  if (rep_ == Representation::physical)
    kern::for_each_index(values_.size(), [&](std::size_t i) { values_[i] *= s; });
  else
    kern::for_each_index(modes_.size(), [&](std::size_t i) { modes_[i] *= s; });
  return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(double s, Field a) { return a *= s; }

VectorField::VectorField(const Grid& grid, int components, Representation rep) {
  components_.assign(static_cast<std::size_t>(components), Field(grid, rep));
}

VectorField::VectorField(std::vector<Field> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("vector field: no components");
  for (const auto& c : components_) {
    require_same_grid(components_.front().grid(), c.grid(), "vector field");
    if (c.representation() != components_.front().representation())
      throw std::invalid_argument("vector field: representation mismatch");
  }
}

const Grid& VectorField::grid() const {
  if (components_.empty()) throw std::logic_error("vector field: empty");
  return components_.front().grid();
}

Representation VectorField::representation() const {
  if (components_.empty()) throw std::logic_error("vector field: empty");
  return components_.front().representation();
}

VectorField& VectorField::axpy(double s, const VectorField& o) {
  if (o.size() != size()) throw std::invalid_argument("vector field arithmetic: component count mismatch");
  for (int i = 0; i < size(); ++i) (*this)[i].axpy(s, o[i]);
  return *this;
}

VectorField& VectorField::operator+=(const VectorField& o) { return axpy(1.0, o); }
VectorField& VectorField::operator-=(const VectorField& o) { return axpy(-1.0, o); }

VectorField& VectorField::operator*=(double s) {
  for (auto& c : components_) c *= s;
  return *this;
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double s, VectorField a) { return a *= s; }

TensorField::TensorField(const Grid& grid, int rows, Representation rep) : rows_(rows) {
  entries_.assign(static_cast<std::size_t>(rows * rows), Field(grid, rep));
}

Field TensorField::trace() const {
  Field t = (*this)(0, 0);
  for (int a = 1; a < rows_; ++a) t += (*this)(a, a);
  return t;
}

}  // namespace nlc
