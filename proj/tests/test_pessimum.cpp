#include <doctest.h>

#include <cmath>

#include "latpack/pessimum.hpp"

using namespace latpack;

TEST_CASE("phi_ball3 is pi over sqrt 18") {
  CHECK(phi_ball3() == doctest::Approx(0.7404804896930611).epsilon(1e-15));
}

TEST_CASE("support construction on the ball and on a dilation") {
  SupportBody ball;
  ball.eta = EvenHarmonic(0);
  ball.epsilon = 0.01;
  AdmissibleResult r0 = construct_support(ball, MatD::identity(3));
  CHECK(r0.admissible);
  CHECK(r0.det_ratio == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(frob_norm(r0.q) <= 1e-12);

  const double delta = 0.004;
  SupportBody dil;
  dil.eta = EvenHarmonic(0);
  dil.eta.coeff(0, 0) = delta;
  dil.epsilon = 0.01;
  AdmissibleResult r1 = construct_support(dil, random_rotation(3));
  CHECK(r1.admissible);
  CHECK(r1.det_ratio == doctest::Approx(std::pow(1.0 + delta, 3)).epsilon(1e-12));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::fabs(r1.q.at(i, j) - (i == j ? delta : 0.0)) <= 1e-12);
}

TEST_CASE("support construction satisfies the first-order determinant bound") {
  const auto& cfg = d3_configuration();
  double cfit = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SupportBody body = random_support_body(seed, 6, 0.005);
    MatD rot = random_rotation(100 + seed);
    AdmissibleResult res = construct_support(body, rot);
    CHECK(res.admissible);
    double sum_ue = 0.0, max_eta2 = 0.0;
    for (std::size_t p = 0; p < cfg.pair_count(); ++p) {
      VecD rx = mat_vec(rot, cfg.unit(p));
      double eta = body.eta.eval(sph_point(rx[0], rx[1], rx[2]));
      sum_ue += 0.5 * eta;
      max_eta2 = std::max(max_eta2, eta * eta);
    }
    cfit = std::max(cfit, (res.det_ratio - 1.0 - sum_ue) / max_eta2);
  }
  CHECK(std::isfinite(cfit));
  CHECK(cfit < 100.0);
}

TEST_CASE("radial construction on the ball") {
  EvenHarmonic zero(4);
  RadialBody ball = make_radial_body(zero, 0.01);
  AdmissibleResult r = construct_radial(ball, MatD::identity(3));
  CHECK(r.admissible);
  CHECK(r.alpha <= 1e-14);  // exactly zero up to roundoff in |v|
  CHECK(r.det_ratio == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(r.phi_lower == doctest::Approx(phi_ball3()).epsilon(1e-12));
}

TEST_CASE("radial construction is admissible for random bodies and rotations") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RadialBody body = random_body(seed, 8, 0.01);
    AdmissibleResult r = construct_radial(body, random_rotation(seed + 50));
    CHECK(r.admissible);
    CHECK(r.checked_vectors >= 12);
    CHECK(r.alpha >= 0.0);
  }
}

TEST_CASE("the measured dilation overhead vanishes with the shell bound") {
  // Fixed perturbation shape rescaled through eps in {1e-2, 1e-3, 1e-4}:
  // eps'(eps) = max(0, det_ratio - 1 - sum ups rho) / sum |rho| must decay.
  RadialBody shape = random_body(9, 6, 0.01);
  MatD rot = random_rotation(77);
  const auto& cfg = d3_configuration();
  std::vector<double> overhead;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    EvenHarmonic rho = shape.rho;
    rho.scale(eps / 1e-2);
    RadialBody body = make_radial_body(rho, eps);
    AdmissibleResult r = construct_radial(body, rot);
    CHECK(r.admissible);
    double sum_ur = 0.0, sum_abs = 0.0;
    for (std::size_t p = 0; p < cfg.pair_count(); ++p) {
      VecD rx = mat_vec(rot, cfg.unit(p));
      double v = body.rho.eval(sph_point(rx[0], rx[1], rx[2]));
      sum_ur += 0.5 * v;
      sum_abs += 2.0 * std::fabs(v);
    }
    overhead.push_back(std::max(0.0, r.det_ratio - 1.0 - sum_ur) / sum_abs);
  }
  CHECK(overhead[2] <= std::max(0.3 * overhead[0], 1e-9));
  CHECK(overhead[1] <= overhead[0] + 1e-12);
}

TEST_CASE("rotation search on the ball and on a zonal body") {
  EvenHarmonic zero(4);
  RadialBody ball = make_radial_body(zero, 0.01);
  RotationSearch rs0 = best_rotation(ball, 16, 10, 1);
  CHECK(std::fabs(rs0.objective) <= 1e-14);

  // Zonal rho = c Y40. The surrogate minimum has the closed form -21c/16
  // (cube-axis alignment: 8 P4(1/sqrt 2) + 4 P4(0) = -7/4), and the
  // fiber-averaged bound min (1/2) Phi[rho] = (3c/2) c_4 min P4 can only be
  // weaker.
  const double c = 0.0025;
  EvenHarmonic rho(4);
  rho.coeff(4, 0) = c;
  RadialBody zonal = make_radial_body(rho, 0.01);
  RotationSearch rs = best_rotation(zonal, 4000, 100, 7);
  CHECK(rs.objective == doctest::Approx(-21.0 * c / 16.0).epsilon(1e-6));
  double scan = 1e300;
  for (int i = 0; i <= 20000; ++i) {
    double t = -1.0 + 2.0 * i / 20000.0;
    scan = std::min(scan, 0.5 * multiplier_c(4) * 3.0 * c * legendre(4, t));
  }
  CHECK(rs.objective <= scan + 1e-9);
}

TEST_CASE("verify_pessimum rejects the ball and scales nearly linearly") {
  EvenHarmonic zero(4);
  RadialBody ball = make_radial_body(zero, 0.01);
  CHECK_THROWS_AS(verify_pessimum(ball, 10, 5, 1), std::invalid_argument);

  RadialBody body = random_body(4, 6, 0.01);
  PessimumVerdict v1 = verify_pessimum(body, 2000, 60, 4);
  CHECK(v1.ok);
  CHECK(v1.phi_lower > phi_ball3());
  CHECK(v1.delta < 0.0);

  EvenHarmonic half = body.rho;
  half.scale(0.5);
  RadialBody body_half = make_radial_body(half, 0.01);
  PessimumVerdict v2 = verify_pessimum(body_half, 2000, 60, 4);
  CHECK(v2.ok);
  // -delta scales roughly linearly with the perturbation: the ratio
  // -delta/l1 stays within a factor 2.
  CHECK(v2.ratio >= 0.5 * v1.ratio);
  CHECK(v2.ratio <= 2.0 * v1.ratio);
}

TEST_CASE("fiber average matches the multiplier prediction") {
  RadialBody body = random_body(6, 6, 0.01);
  SphPoint y = sph_point(0.3, -0.5, 0.9);
  FiberAverage fa = fiber_average(body, y, 40000, 99);
  CHECK(std::fabs(fa.mean - fa.predicted) <= 3.0 * fa.stderr_);
}
