#include <omp.h>

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "nlc/kernels.hpp"

using namespace nlc;
namespace omp = nlc::kernels::omp;
namespace serial = nlc::kernels::serial;

namespace {

struct Arrays {
  std::vector<std::vector<double>> data;

  Arrays(std::size_t count, std::size_t size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    data.assign(count, std::vector<double>(size));
    for (auto& a : data)
      for (double& x : a) x = normal(rng);
  }
  std::vector<std::span<const double>> in() const {
    std::vector<std::span<const double>> s;
    for (const auto& a : data) s.emplace_back(a);
    return s;
  }
  std::vector<std::span<double>> out() {
    std::vector<std::span<double>> s;
    for (auto& a : data) s.emplace_back(a);
    return s;
  }
};

std::vector<cplx> random_modes(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<cplx> c(g.spectral_size());
  for (auto& x : c) x = cplx(normal(rng), normal(rng));
  return c;
}

bool same(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b) { return a == b; }

}  // namespace

TEST_CASE("elementwise kernels agree bitwise") {
  for (int dim : {2, 3}) {
    CAPTURE(dim);
    const std::size_t size = dim == 2 ? 4096 + 17 : 9001;
    const std::size_t dd = static_cast<std::size_t>(dim * dim);

    const Arrays d(static_cast<std::size_t>(dim), size, 1);
    Arrays f1(static_cast<std::size_t>(dim), size, 0), f2 = f1;
    omp::gl_force(d.in(), 100.0, f1.out());
    serial::gl_force(d.in(), 100.0, f2.out());
    CHECK(same(f1.data, f2.data));

    std::vector<double> m1(size), m2(size);
    omp::magnitude_squared(d.in(), m1);
    serial::magnitude_squared(d.in(), m2);
    CHECK(m1 == m2);
    CHECK(omp::max_abs(m1) == serial::max_abs(m2));

    const Arrays grad(dd, size, 2);
    Arrays a1(static_cast<std::size_t>(dim), size, 0), a2 = a1;
    omp::advect(d.in(), grad.in(), a1.out());
    serial::advect(d.in(), grad.in(), a2.out());
    CHECK(same(a1.data, a2.data));

    Arrays t1(dd, size, 0), t2 = t1;
    omp::elastic_tensor(grad.in(), dim, t1.out());
    serial::elastic_tensor(grad.in(), dim, t2.out());
    CHECK(same(t1.data, t2.data));

    omp::lans_tensor(grad.in(), dim, t1.out());
    serial::lans_tensor(grad.in(), dim, t2.out());
    CHECK(same(t1.data, t2.data));
  }
}

TEST_CASE("spectral kernels agree bitwise") {
  for (int dim : {2, 3}) {
    CAPTURE(dim);
    const Grid g = make_grid(dim, dim == 2 ? 48 : 16);
    const auto in = random_modes(g, 3);
    for (int axis = 0; axis < dim; ++axis) {
      std::vector<cplx> o1(in.size()), o2(in.size());
      omp::derivative(g, axis, in, o1);
      serial::derivative(g, axis, in, o2);
      CHECK(o1 == o2);
    }

    std::vector<std::vector<cplx>> v1, v2;
    for (int c = 0; c < dim; ++c) v1.push_back(random_modes(g, 10 + static_cast<std::uint64_t>(c)));
    v2 = v1;
    std::vector<std::span<cplx>> s1(v1.begin(), v1.end()), s2(v2.begin(), v2.end());
    omp::leray_project(g, s1);
    serial::leray_project(g, s2);
    CHECK(v1 == v2);

    auto c1 = in, c2 = in;
    omp::truncate_two_thirds(g, c1);
    serial::truncate_two_thirds(g, c2);
    CHECK(c1 == c2);
  }
}

TEST_CASE("reductions agree to rounding and do not depend on the thread count") {
  const Arrays v(1, 100003, 4);
  const auto x = v.data[0];
  CHECK(omp::sum(x) == doctest::Approx(serial::sum(x)).epsilon(1e-12));
  for (double p : {1.0, 2.0, 3.0, 4.0, 8.0})
    CHECK(omp::sum_abs_pow(x, p) == doctest::Approx(serial::sum_abs_pow(x, p)).epsilon(1e-12));

  const Grid g = make_grid(3, 16);
  const auto a = random_modes(g, 5), b = random_modes(g, 6);
  CHECK(omp::spectral_inner(g, a, b) == doctest::Approx(serial::spectral_inner(g, a, b)).epsilon(1e-12));

  const double reference = omp::sum_abs_pow(x, 2.0);
  const double inner = omp::spectral_inner(g, a, b);
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 3, 5}) {
    omp_set_num_threads(threads);
    CHECK(omp::sum_abs_pow(x, 2.0) == reference);
    CHECK(omp::spectral_inner(g, a, b) == inner);
  }
  omp_set_num_threads(saved);
}
