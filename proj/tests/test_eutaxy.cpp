#include <doctest.h>

#include <cmath>
#include <random>

#include "latpack/eutaxy.hpp"
#include "latpack/lattice.hpp"

using namespace latpack;

namespace {

VectorConfiguration config_of(const Lattice& lat) {
  return unit_configuration(lat, minimal_vectors(lat));
}

// Two orthogonal pairs {+-e1, +-e2} in R^2.
VectorConfiguration cross_polytope2() {
  RatMatrix id = RatMatrix::identity(2);
  return VectorConfiguration(id, MatD::identity(2), {{1, 0}, {0, 1}});
}

}  // namespace

TEST_CASE("perfection of the named configurations") {
  CHECK(is_perfect(config_of(root_a(2))));
  CHECK(!is_perfect(cross_polytope2()));  // rank 2 < 3
}

TEST_CASE("eutaxy classes and exact coefficients") {
  auto d3 = config_of(root_d(3));
  auto [cls, coef] = eutaxy_class(d3);
  CHECK(cls == EutaxyClass::eutactic);
  REQUIRE(coef.size() == 6);
  for (const auto& c : coef) CHECK(c == Rational(1, 4));
  CHECK(verify_eutaxy_coefficients(d3, coef));

  // Removing a pair from S(D_4) leaves a semi-eutactic, non-eutactic set.
  auto d4 = config_of(root_d(4));
  auto reduced = d4.without_pair(0);
  auto [cls4, coef4] = eutaxy_class(reduced);
  CHECK(cls4 == EutaxyClass::semi);
  CHECK(verify_eutaxy_coefficients(reduced, coef4));
  bool has_zero = false;
  for (const auto& c : coef4) {
    CHECK(c.sign() >= 0);
    has_zero = has_zero || c.is_zero();
  }
  CHECK(has_zero);
}

TEST_CASE("E6 reduced configuration is eutactic with the class coefficients") {
  auto e6 = config_of(root_e(6));
  auto reduced = e6.without_pair(0);
  auto [cls, coef] = eutaxy_class(reduced);
  CHECK(cls == EutaxyClass::eutactic);
  CHECK(verify_eutaxy_coefficients(reduced, coef));
  // The inner-product-class coefficients of the full configuration: 1/15 on
  // the orthogonal class, 1/10 at +-1/2, zero on the removed pair itself.
  std::vector<Rational> by_class(e6.pair_count());
  for (std::size_t p = 0; p < e6.pair_count(); ++p) {
    Rational ip = abs(e6.unit_inner(p, 0));
    by_class[p] = ip == Rational(0) ? Rational(1, 15)
                : ip == Rational(1, 2) ? Rational(1, 10)
                                       : Rational(0);
  }
  CHECK(verify_eutaxy_coefficients(e6, by_class));
  CHECK(is_perfect(reduced));
}

TEST_CASE("uniform eutaxy") {
  CHECK(verify_uniform_eutaxy(config_of(root_d(3))));
  CHECK(verify_uniform_eutaxy(config_of(root_a(2))));
  CHECK(verify_uniform_eutaxy(config_of(root_e(6))));
  RatMatrix id = RatMatrix::identity(2);
  VectorConfiguration single(id, MatD::identity(2), {{1, 0}});
  CHECK(!verify_uniform_eutaxy(single));
}

TEST_CASE("classify reproduces the small table") {
  auto rep_a2 = classify(config_of(root_a(2)));
  CHECK(rep_a2.perfect);
  CHECK(rep_a2.eutaxy == EutaxyClass::eutactic);
  CHECK(rep_a2.minimally_extreme);

  ClassifyOptions opts;
  opts.check_redundancy = true;
  auto rep_d4 = classify(config_of(root_d(4)), opts);
  CHECK(rep_d4.extreme);
  CHECK(!rep_d4.minimally_extreme);
  CHECK(rep_d4.redundantly_semi_eutactic.value_or(false));
  CHECK(!rep_d4.redundantly_extreme.value_or(true));

  auto rep_e6 = classify(config_of(root_e(6)), opts);
  CHECK(rep_e6.redundantly_extreme.value_or(false));

  // D3 is minimally extreme, so deleting any pair destroys semi-eutaxy.
  opts.transitive = false;
  auto rep_d3 = classify(config_of(root_d(3)), opts);
  CHECK(rep_d3.minimally_extreme);
  CHECK(!rep_d3.redundantly_semi_eutactic.value_or(true));
}

TEST_CASE("classification coefficients satisfy the identity exactly") {
  for (const Lattice& lat : {root_a(3), root_d(5), root_e(7)}) {
    auto cfg = config_of(lat);
    auto rep = classify(cfg);
    CHECK(rep.extreme);
    CHECK(verify_eutaxy_coefficients(cfg, rep.coefficients));
  }
}

TEST_CASE("minimally extreme coefficients are the unique LP solution") {
  auto d3 = config_of(root_d(3));
  auto unique = minimally_extreme_coefficients(d3);
  auto [cls, lp_sol] = eutaxy_class(d3);
  CHECK(cls == EutaxyClass::eutactic);
  REQUIRE(unique.size() == lp_sol.size());
  for (std::size_t p = 0; p < unique.size(); ++p) CHECK(unique[p] == lp_sol[p]);
  CHECK_THROWS_AS(minimally_extreme_coefficients(config_of(root_d(4))), std::invalid_argument);
}

TEST_CASE("shrink witness for an eutactic but imperfect configuration") {
  auto cross = cross_polytope2();
  ShrinkWitness w = shrink_witness(cross);
  CHECK(w.det_t < 1.0);
  CHECK(w.min_stretch >= 1.0 - 1e-12);
  CHECK(frob_dist_identity(w.t) <= 1e-2);
  // The separating direction leaves the configuration vectors unstretched:
  // <e_i, Q e_i> = 0.
  CHECK(std::fabs(w.q.at(0, 0)) <= 1e-12);
  CHECK(std::fabs(w.q.at(1, 1)) <= 1e-12);
}

TEST_CASE("shrink witnesses for reduced D_n configurations") {
  for (std::size_t n : {4ul, 5ul}) {
    auto cfg = config_of(root_d(n)).without_pair(0);
    ShrinkWitness w = shrink_witness(cfg);
    CHECK(w.det_t < 1.0);
    CHECK(w.min_stretch >= 1.0 - 1e-12);
  }
  CHECK_THROWS_AS(shrink_witness(config_of(root_d(3))), std::domain_error);
}

TEST_CASE("interpolate_symmetric on S(D_3)") {
  auto d3 = config_of(root_d(3));
  VecD zero(6, 0.0);
  MatD q0 = interpolate_symmetric(d3, zero);
  CHECK(frob_norm(q0) <= 1e-13);

  // Constant omega forces a multiple of the identity with trace 3 delta.
  double delta = 0.37;
  VecD con(6, delta);
  MatD qc = interpolate_symmetric(d3, con);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::fabs(qc.at(i, j) - (i == j ? delta : 0.0)) <= 1e-12);

  std::mt19937_64 rng(3);
  VecD w1(6), w2(6);
  for (int p = 0; p < 6; ++p) {
    w1[p] = (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 0.5;
    w2[p] = (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 0.5;
  }
  MatD qa = interpolate_symmetric(d3, w1);
  // Interpolation residual at every pair.
  for (int p = 0; p < 6; ++p) {
    VecD qx = mat_vec(qa, d3.unit(p));
    CHECK(std::fabs(dot(d3.unit(p), qx) - w1[p]) <= 1e-12);
  }
  // Linearity by superposition.
  VecD sum(6);
  for (int p = 0; p < 6; ++p) sum[p] = w1[p] + w2[p];
  MatD qb = interpolate_symmetric(d3, w2);
  MatD qs = interpolate_symmetric(d3, sum);
  for (std::size_t t = 0; t < 9; ++t)
    CHECK(std::fabs(qs.e[t] - qa.e[t] - qb.e[t]) <= 1e-12);
}

TEST_CASE("expansion check closed forms") {
  auto d3 = config_of(root_d(3));
  auto at_id = expansion_check(d3, MatD::identity(3));
  CHECK(std::fabs(at_id.lhs) <= 1e-15);
  CHECK(std::fabs(at_id.rhs) <= 1e-15);

  double delta = 0.01;
  MatD t = MatD::identity(3);
  for (int i = 0; i < 3; ++i) t.at(i, i) = 1.0 + delta;
  auto chk = expansion_check(d3, t);
  double lhs_exact = std::pow(1.0 + delta, 3) - 1.0;
  double rhs_exact = std::sqrt(3.0) * (std::pow(1.0 + delta, 2) - 1.0);
  CHECK(chk.lhs == doctest::Approx(lhs_exact).epsilon(1e-12));
  CHECK(chk.rhs == doctest::Approx(rhs_exact).epsilon(1e-12));

  MatD far = MatD::identity(3);
  far.at(0, 0) = 1.2;
  CHECK_THROWS_AS(expansion_check(d3, far), std::invalid_argument);
  MatD shrinkt = MatD::identity(3);
  shrinkt.at(0, 0) = 0.98;
  CHECK_THROWS_AS(expansion_check(d3, shrinkt), std::invalid_argument);
}

TEST_CASE("certificate subsets transfer extremality") {
  // S(E8) certified through its D8-shaped subconfiguration: pairs whose
  // mutual inner products with a fixed pair stay in {0, +-1/2} mimic the
  // direct route; here simply compare certificate and direct answers.
  auto e7 = config_of(root_e(7));
  ClassifyOptions direct;
  direct.check_redundancy = true;
  auto rep_direct = classify(e7, direct);
  CHECK(rep_direct.redundantly_extreme.value_or(false));
}
