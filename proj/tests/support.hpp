#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "nlc/field.hpp"
#include "nlc/operators.hpp"
#include "nlc/transform.hpp"

namespace nlc::test {

inline Field random_field(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Field f(g);
  for (double& x : f.values()) x = normal(rng);
  return f;
}

inline VectorField random_vector(const Grid& g, int comps, std::uint64_t seed) {
  std::vector<Field> c;
  for (int i = 0; i < comps; ++i) c.push_back(random_field(g, seed * 31 + static_cast<std::uint64_t>(i)));
  return VectorField(std::move(c));
}

/// Random field containing only modes with |k_j| <= kmax, built by direct
/// trigonometric synthesis so it does not depend on the transform code.
inline Field smooth_random_field(const Grid& g, int kmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const int kz_max = g.dim() == 3 ? kmax : 0;
  struct Term { int kx, ky, kz; double a, b; };
  std::vector<Term> terms;
  for (int kx = -kmax; kx <= kmax; ++kx)
    for (int ky = -kmax; ky <= kmax; ++ky)
      for (int kz = -kz_max; kz <= kz_max; ++kz) {
        const double scale = 1.0 / (1.0 + kx * kx + ky * ky + kz * kz);
        terms.push_back({kx, ky, kz, scale * normal(rng), scale * normal(rng)});
      }
  const double k0 = g.k0();
  return Field::sample(g, [&](double x, double y, double z) {
    double s = 0.0;
    for (const auto& t : terms) {
      const double ph = k0 * (t.kx * x + t.ky * y + t.kz * z);
      s += t.a * std::cos(ph) + t.b * std::sin(ph);
    }
    return s;
  });
}

inline double rel_l2(const Field& a, const Field& b) {
  const double denom = std::max(lp_norm(b, 2.0), 1e-300);
  return lp_norm(to_physical(a) - to_physical(b), 2.0) / denom;
}

inline double rel_l2(const VectorField& a, const VectorField& b) {
  const double denom = std::max(lp_norm(b, 2.0), 1e-300);
  return lp_norm(to_physical(a) - to_physical(b), 2.0) / denom;
}

inline double abs_l2(const Field& a, const Field& b) { return lp_norm(to_physical(a) - to_physical(b), 2.0); }
inline double abs_l2(const VectorField& a, const VectorField& b) {
  return lp_norm(to_physical(a) - to_physical(b), 2.0);
}

}  // namespace nlc::test
