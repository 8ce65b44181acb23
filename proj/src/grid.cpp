#include "nlc/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nlc {

double Grid::volume() const { return std::pow(length_, dim_); }

double Grid::cell_weight() const { return std::pow(spacing(), dim_); }

Grid make_grid(int dim, int n, double length) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("grid: dim must be 2 or 3, got " + std::to_string(dim));
  if (n % 2 != 0) throw std::invalid_argument("grid: n must be even, got " + std::to_string(n));
  if (n < 8) throw std::invalid_argument("grid: n must be at least 8, got " + std::to_string(n));
  if (!(length > 0.0) || !std::isfinite(length)) throw std::invalid_argument("grid: length must be positive");
  return Grid(dim, n, length);
}

}  // namespace nlc
