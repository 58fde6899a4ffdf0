#include <doctest.h>

#include <cmath>

#include "latpack/body.hpp"

using namespace latpack;

namespace {

// Exact integral over [-1,1] of P_4(t)^3 by symbolic polynomial arithmetic;
// the hand cofactor expansion gives 36/1001.
Rational integral_p4_cubed() {
  std::vector<Rational> p{Rational(3, 8), Rational(0), Rational(-30, 8),
                          Rational(0), Rational(35, 8)};
  auto mul = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  std::vector<Rational> cube = mul(mul(p, p), p);
  Rational integral(0);
  for (std::size_t k = 0; k < cube.size(); k += 2)
    integral += cube[k] * Rational(2, static_cast<long>(k) + 1);
  return integral;
}

double y40_cube_integral() {
  Rational i = integral_p4_cubed();
  REQUIRE(i == Rational(36, 1001));
  return 27.0 * (i / Rational(2)).to_double();
}

}  // namespace

TEST_CASE("random bodies are deterministic and respect the scaling contract") {
  RadialBody a = random_body(42, 4, 0.01);
  RadialBody b = random_body(42, 4, 0.01);
  for (int l = 4; l <= 4; l += 2)
    for (int m = -l; m <= l; ++m) CHECK(a.rho.coeff(l, m) == b.rho.coeff(l, m));
  CHECK(a.max_abs_rho >= 0.0089);
  CHECK(a.max_abs_rho <= 0.009 + 1e-12);
  CHECK(a.rho.degree_norm(2) == 0.0);
  CHECK(a.rho.mean() == 0.0);
  CHECK(a.normalized);
  RadialBody c = random_body(43, 4, 0.01);
  bool differs = false;
  for (int m = -4; m <= 4; ++m)
    differs = differs || a.rho.coeff(4, m) != c.rho.coeff(4, m);
  CHECK(differs);
  CHECK_THROWS_AS(random_body(1, 5, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(random_body(1, 4, 0.05), std::invalid_argument);
}

TEST_CASE("volume of the ball and of perturbed bodies") {
  EvenHarmonic zero(4);
  RadialBody ball = make_radial_body(zero, 0.01);
  CHECK(volume(ball) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-12));

  // Normalized bodies cannot lose volume (power-mean bound).
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    RadialBody body = random_body(seed, 6, 0.01);
    CHECK(volume(body) >= 4.0 * M_PI / 3.0 - 1e-13);
  }

  // rho = 0.01 Y40: termwise integral with exact orthonormality.
  EvenHarmonic rho(4);
  rho.coeff(4, 0) = 0.01;
  RadialBody body = make_radial_body(rho, 0.05);
  double want = 4.0 * M_PI / 3.0 *
                (1.0 + 3.0 * 1e-4 + 1e-6 * y40_cube_integral());
  CHECK(std::fabs(volume(body) - want) <= 1e-10);
}

TEST_CASE("shell bound is verified on the grid") {
  EvenHarmonic rho(4);
  rho.coeff(4, 0) = 0.02;  // peaks at 0.06 on the poles
  CHECK_THROWS_AS(make_radial_body(rho, 0.01), std::invalid_argument);
}

TEST_CASE("quadratic removal leaves clean bodies untouched") {
  RadialBody body = random_body(5, 6, 0.005);
  QuadraticRemoval qr = remove_quadratic(body);
  CHECK(qr.iterations <= 2);
  CHECK(frob_dist_identity(qr.transform) <= 1e-8);
  CHECK(qr.body.rho.degree_norm(2) <= 1e-9);
  CHECK(std::fabs(qr.body.rho.mean()) <= 1e-12);
}

TEST_CASE("quadratic removal flattens an injected degree-2 component") {
  RadialBody base = random_body(8, 6, 0.004);
  EvenHarmonic rho = base.rho;
  rho.coeff(2, 0) = 0.005;
  rho.coeff(0, 0) = -0.002;
  RadialBody injected = make_radial_body(rho, 0.02);
  QuadraticRemoval qr = remove_quadratic(injected);
  CHECK(qr.iterations <= 50);
  CHECK(qr.body.rho.degree_norm(2) <= 1e-9);
  CHECK(std::fabs(qr.body.rho.mean()) <= 1e-12);
  CHECK(qr.body.normalized);
}

TEST_CASE("quadratic removal maps a near-ellipsoid back to a near-ball") {
  // Radial function of the ellipsoid (Id + A0) B^3, exactly.
  MatD a0 = MatD::identity(3);
  const double s = 0.004;
  a0.at(0, 0) += 2 * s;
  a0.at(1, 1) += -s;
  a0.at(2, 2) += -s;
  MatD inv = invert(a0);
  const auto& quad = SphereQuadrature::shared(40);
  auto r_ell = [&](const SphPoint& u) {
    VecD y = mat_vec(inv, {u.x, u.y, u.z});
    return 1.0 / norm2(y);
  };
  EvenHarmonic proj = project_even(quad, r_ell, 8, quad.degree() - 8);
  EvenHarmonic rho = proj;
  rho.coeff(0, 0) -= 1.0;
  RadialBody body = make_radial_body(rho, 0.02);
  QuadraticRemoval qr = remove_quadratic(body);
  // The output must be a ball up to O(|A0|^2).
  CHECK(qr.body.rho.coeff_norm() <= 20.0 * (2 * s) * (2 * s));
  CHECK(qr.body.rho.degree_norm(2) <= 1e-9);
}

TEST_CASE("convexity spot check accepts small perturbations") {
  RadialBody body = random_body(11, 6, 0.01);
  CHECK(convexity_spot_check(body, 800, 1e-6));
}
