#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support.hpp"

using namespace nlc;
using nlc::test::abs_l2;
using nlc::test::rel_l2;
using std::numbers::pi;

TEST_CASE("make_grid volume and validation") {
  CHECK(make_grid(2, 64, 2 * pi).volume() == doctest::Approx(4 * pi * pi).epsilon(1e-14));
  CHECK(make_grid(3, 32, 2 * pi).volume() == doctest::Approx(8 * pi * pi * pi).epsilon(1e-14));
  const Grid g = make_grid(2, 16, 3.0);
  CHECK(g.cell_weight() == doctest::Approx(std::pow(3.0 / 16, 2)));
  CHECK(integrate(Field::constant(g, 1.0)) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK_THROWS_AS(make_grid(2, 63, 2 * pi), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(4, 64, 2 * pi), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(2, 64, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(2, 6, 1.0), std::invalid_argument);
}

TEST_CASE("wavenumber range") {
  const Grid g = make_grid(2, 8);
  CHECK(g.wave_index(0) == 0);
  CHECK(g.wave_index(4) == 4);
  CHECK(g.wave_index(5) == -3);
  CHECK(g.wave_index(7) == -1);
  CHECK(g.derivative_k(4) == 0.0);
}

TEST_CASE("transform round trip and Parseval") {
  for (int dim : {2, 3})
    for (int n : {8, 16, 32}) {
      const Grid g = make_grid(dim, n);
      const Field f = test::random_field(g, 7u + static_cast<unsigned>(n));
      const Field s = to_spectral(f);
      CHECK(s.is_spectral());
      CHECK(rel_l2(to_physical(s), f) < 1e-12);
      CHECK(std::abs(lp_norm(s, 2.0) - lp_norm(f, 2.0)) < 1e-12 * lp_norm(f, 2.0));
    }
}

TEST_CASE("spectrum of simple fields") {
  const Grid g = make_grid(2, 16);
  const Field c = to_spectral(Field::constant(g, 2.5));
  CHECK(c.modes()[0].real() == doctest::Approx(2.5));
  double rest = 0.0;
  for (std::size_t m = 1; m < c.modes().size(); ++m) rest += std::abs(c.modes()[m]);
  CHECK(rest < 1e-13);

  // sin x = (e^{ix} - e^{-ix}) / 2i: coefficients -i/2 at k=(1,0) and +i/2 at k=(-1,0).
  const Field s = to_spectral(Field::sample(g, [](double x, double, double) { return std::sin(x); }));
  const int h = g.half();
  int nonzero = 0;
  for (std::size_t m = 0; m < s.modes().size(); ++m)
    if (std::abs(s.modes()[m]) > 1e-12) ++nonzero;
  CHECK(nonzero == 2);
  CHECK(std::abs(s.modes()[static_cast<std::size_t>(1 * h)] - cplx(0, -0.5)) < 1e-14);
  CHECK(std::abs(s.modes()[static_cast<std::size_t>(15 * h)] - cplx(0, 0.5)) < 1e-14);
}

TEST_CASE("conjugate symmetry on the self-conjugate plane") {
  const Grid g = make_grid(2, 16);
  const Field s = to_spectral(test::random_field(g, 3));
  const int h = g.half();
  for (int a = 1; a < g.n(); ++a) {
    const cplx p = s.modes()[static_cast<std::size_t>(a * h)];
    const cplx q = s.modes()[static_cast<std::size_t>((g.n() - a) * h)];
    CHECK(std::abs(p - std::conj(q)) < 1e-14);
  }
}

TEST_CASE("non-finite samples are rejected") {
  const Grid g = make_grid(2, 8);
  Field f(g);
  f.values()[3] = std::nan("");
  CHECK_THROWS_AS(to_spectral(f), std::domain_error);
}

TEST_CASE("derivative examples") {
  const Grid g = make_grid(2, 32);
  const Field s = Field::sample(g, [](double x, double, double) { return std::sin(x); });
  const VectorField gs = gradient(s);
  CHECK(abs_l2(gs[0], Field::sample(g, [](double x, double, double) { return std::cos(x); })) < 1e-12);
  CHECK(lp_norm(gs[1], 2.0) < 1e-12);

  CHECK(lp_norm(laplacian(Field::constant(g, 3.0)), 2.0) < 1e-13);

  const VectorField v = VectorField::sample(g, 2, [](int c, double x, double y, double) {
    return c == 0 ? std::cos(x) : std::cos(y);
  });
  const Field dv = divergence(v);
  CHECK(abs_l2(dv, Field::sample(g, [](double x, double y, double) { return -std::sin(x) - std::sin(y); })) < 1e-12);

  // Representation is preserved.
  CHECK(gradient(to_spectral(s)).is_spectral());
  CHECK(divergence(v).is_physical());
}

TEST_CASE("divergence of gradient equals laplacian") {
  for (int dim : {2, 3}) {
    const Grid g = make_grid(dim, 16);
    const Field f = test::random_field(g, 11);
    const Field lhs = divergence(gradient(f));
    CHECK(abs_l2(lhs, laplacian(f)) < 1e-12 * lp_norm(laplacian(f), 2.0));
  }
}

TEST_CASE("grid mismatch is rejected") {
  const Grid a = make_grid(2, 16);
  const Grid b = make_grid(2, 32);
  CHECK_THROWS_AS(VectorField(std::vector<Field>{Field(a), Field(b)}), std::invalid_argument);
  CHECK_THROWS_AS(l2_inner(Field(a), Field(b)), std::invalid_argument);
}

TEST_CASE("leray projection examples") {
  const Grid g = make_grid(2, 32);
  const VectorField grad_sin = VectorField::sample(g, 2, [](int c, double x, double, double) {
    return c == 0 ? std::cos(x) : 0.0;
  });
  CHECK(lp_norm(leray_project(grad_sin), 2.0) < 1e-13);

  const VectorField tg = VectorField::sample(g, 2, [](int c, double x, double y, double) {
    return c == 0 ? std::sin(x) * std::cos(y) : -std::cos(x) * std::sin(y);
  });
  CHECK(rel_l2(leray_project(tg), tg) < 1e-14);

  const VectorField cst = VectorField::sample(g, 2, [](int c, double, double, double) { return c == 0 ? 1.5 : -2.0; });
  CHECK(rel_l2(leray_project(cst), cst) < 1e-14);
}

TEST_CASE("leray projection is idempotent, self-adjoint and solenoidal") {
  for (int dim : {2, 3}) {
    const Grid g = make_grid(dim, 16);
    const VectorField v = test::random_vector(g, dim, 5);
    const VectorField w = test::random_vector(g, dim, 9);
    const VectorField pv = leray_project(v);
    CHECK(rel_l2(leray_project(pv), pv) < 1e-12);
    const double a = l2_inner(pv, w);
    const double b = l2_inner(v, leray_project(w));
    CHECK(std::abs(a - b) < 1e-12 * lp_norm(v, 2.0) * lp_norm(w, 2.0));
    CHECK(lp_norm(divergence(pv), 2.0) < 1e-12 * hs_seminorm(v, 1));
  }
}

TEST_CASE("helmholtz inverse") {
  const Grid g = make_grid(2, 32);
  const Field c = Field::constant(g, 4.0);
  CHECK(abs_l2(helmholtz_inverse(c, 0.1), c) < 1e-13);
  const Field s = Field::sample(g, [](double x, double, double) { return std::sin(x); });
  CHECK(abs_l2(helmholtz_inverse(s, 1.0), 0.5 * s) < 1e-13);
  const Field r = test::random_field(g, 4);
  CHECK(rel_l2(helmholtz_inverse(r, 0.0), r) < 1e-14);
  CHECK_THROWS_AS(helmholtz_inverse(r, -0.1), std::invalid_argument);

  for (double alpha : {0.0, 0.3, 1.0}) {
    const Field lhs = helmholtz_inverse(r - alpha * alpha * laplacian(r), alpha);
    CHECK(rel_l2(lhs, r) < 1e-10);
  }
}

TEST_CASE("dealias") {
  const Grid g = make_grid(2, 24);
  const Field low = test::smooth_random_field(g, 8, 2);  // 8 = n/3: kept
  CHECK(rel_l2(dealias(low), low) < 1e-13);
  const Field nyq = Field::sample(g, [](double x, double, double) { return std::cos(12 * x); });
  CHECK(lp_norm(dealias(nyq), 2.0) < 1e-13);
  const Field r = test::random_field(g, 8);
  const Field once = dealias(r);
  CHECK(rel_l2(dealias(once), once) < 1e-15);
}

TEST_CASE("deformation tensor") {
  const Grid g = make_grid(2, 32);
  const VectorField cst = VectorField::sample(g, 2, [](int, double, double, double) { return 1.0; });
  const TensorField dc = def_tensor(cst);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(lp_norm(dc(a, b), 2.0) < 1e-13);

  const VectorField shear = VectorField::sample(g, 2, [](int c, double, double y, double) {
    return c == 0 ? std::sin(y) : 0.0;
  });
  const TensorField ds = def_tensor(shear);
  const Field half_cos = Field::sample(g, [](double, double y, double) { return 0.5 * std::cos(y); });
  CHECK(abs_l2(ds(0, 1), half_cos) < 1e-12);
  CHECK(abs_l2(ds(1, 0), half_cos) < 1e-12);
  CHECK(lp_norm(ds(0, 0), 2.0) < 1e-13);
  CHECK(lp_norm(ds(1, 1), 2.0) < 1e-13);

  for (int dim : {2, 3}) {
    const Grid h = make_grid(dim, 16);
    const VectorField v = test::random_vector(h, dim, 21);
    const Field tr = def_tensor(v).trace();
    CHECK(abs_l2(tr, divergence(v)) < 1e-12 * hs_seminorm(v, 1));
    CHECK(lp_norm(def_tensor(leray_project(v)).trace(), 2.0) < 1e-12 * hs_seminorm(v, 1));
  }
}

TEST_CASE("norms and inner products") {
  const Grid g = make_grid(2, 32);
  const Field s = Field::sample(g, [](double x, double, double) { return std::sin(x); });
  const Field c = Field::sample(g, [](double x, double, double) { return std::cos(x); });
  CHECK(lp_norm(s, 2.0) == doctest::Approx(std::sqrt(2 * pi * pi)).epsilon(1e-13));
  CHECK(lp_norm(to_spectral(s), 2.0) == doctest::Approx(std::sqrt(2 * pi * pi)).epsilon(1e-13));
  CHECK(lp_norm(Field::constant(g, 1.0), infinity_norm) == 1.0);
  CHECK(std::abs(l2_inner(s, c)) < 1e-13);
  // int sin^4 = 3/8 * 4 pi^2
  CHECK(lp_norm(s, 4.0) == doctest::Approx(std::pow(1.5 * pi * pi, 0.25)).epsilon(1e-13));
  CHECK(hs_seminorm(s, 1) == doctest::Approx(std::sqrt(2 * pi * pi)).epsilon(1e-13));
  CHECK(hs_seminorm(s, 3) == doctest::Approx(std::sqrt(2 * pi * pi)).epsilon(1e-13));
  CHECK_THROWS_AS(lp_norm(s, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(lp_norm(to_spectral(s), 4.0), std::invalid_argument);
}
