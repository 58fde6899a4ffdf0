#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "latpack/eutaxy.hpp"
#include "latpack/lattice.hpp"

using namespace latpack;

namespace {

// Exhaustive coefficient box search for anything shorter than the claimed
// minimum. Exact: the Gram is scaled to integers and evaluated in int64.
bool box_confirms_minimum(const Lattice& lat, const Rational& norm) {
  const std::size_t n = lat.dim;
  BigInt lambda = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), lat.gram.at(i, j).den().get_mpz_t());
  std::vector<long long> gz(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt v = lat.gram.at(i, j).num() * (lambda / lat.gram.at(i, j).den());
      REQUIRE(v.fits_slong_p());
      gz[i * n + j] = v.get_si();
    }
  Rational scaled = norm * Rational(lambda);
  REQUIRE(scaled.den() == 1);
  REQUIRE(scaled.num().fits_slong_p());
  long long target = scaled.num().get_si();

  std::vector<int> c(n, -3);
  for (;;) {
    bool zero = std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
    if (!zero) {
      long long q = 0;
      for (std::size_t i = 0; i < n; ++i) {
        long long row = 0;
        for (std::size_t j = 0; j < n; ++j) row += gz[i * n + j] * c[j];
        q += row * c[i];
      }
      if (q < target) return false;
    }
    std::size_t k = 0;
    while (k < n && c[k] == 3) c[k++] = -3;
    if (k == n) break;
    ++c[k];
  }
  return true;
}

}  // namespace

TEST_CASE("A_n Gram follows the Dynkin diagram") {
  Lattice a2 = root_a(2);
  CHECK(a2.gram.at(0, 0) == Rational(1));
  CHECK(a2.gram.at(1, 1) == Rational(1));
  CHECK(a2.gram.at(0, 1) == Rational(-1, 2));
  CHECK(det_exact(a2.gram) == Rational(3, 4));
  CHECK_THROWS_AS(root_a(1), std::invalid_argument);
}

TEST_CASE("A_3 and D_3 are the same lattice up to generator reordering") {
  Lattice a3 = root_a(3), d3 = root_d(3);
  int perm[3] = {0, 1, 2};
  std::sort(perm, perm + 3);
  bool found = false;
  do {
    bool same = true;
    for (int i = 0; i < 3 && same; ++i)
      for (int j = 0; j < 3 && same; ++j)
        same = a3.gram.at(i, j) == d3.gram.at(perm[i], perm[j]);
    found = found || same;
  } while (std::next_permutation(perm, perm + 3));
  CHECK(found);
}

TEST_CASE("D_n determinant and minimal shell") {
  for (std::size_t n = 3; n <= 8; ++n) {
    Lattice d = root_d(n);
    // d(D_n) = 2 * 2^{-n/2}, so det(Gram) = 4 / 2^n.
    CHECK(det_exact(d.gram) == Rational(4, 1L << n));
    MinimalVectors mv = minimal_vectors(d);
    CHECK(mv.norm == Rational(1));
    CHECK(mv.count == 2 * n * (n - 1));
  }
  CHECK_THROWS_AS(root_d(2), std::invalid_argument);
}

TEST_CASE("minimal vector counts of the root lattices") {
  for (std::size_t n = 2; n <= 8; ++n)
    CHECK(minimal_vectors(root_a(n)).count == n * (n + 1));
  CHECK(minimal_vectors(root_e(6)).count == 72);
  CHECK(minimal_vectors(root_e(7)).count == 126);
  CHECK(minimal_vectors(root_e(8)).count == 240);
  CHECK_THROWS_AS(root_e(5), std::invalid_argument);
}

TEST_CASE("enumeration certificate against the coefficient box") {
  std::vector<Lattice> lats;
  for (std::size_t n = 2; n <= 8; ++n) lats.push_back(root_a(n));
  for (std::size_t n = 3; n <= 8; ++n) lats.push_back(root_d(n));
  for (std::size_t n : {6ul, 7ul, 8ul}) lats.push_back(root_e(n));
  for (const Lattice& lat : lats) {
    MinimalVectors mv = minimal_vectors(lat);
    CHECK(box_confirms_minimum(lat, mv.norm));
  }
  // Every reported vector has the minimal norm exactly.
  for (const Lattice& lat : {root_a(4), root_e(8)}) {
    MinimalVectors mv = minimal_vectors(lat);
    for (const auto& c : mv.coords) {
      Rational q(0);
      for (std::size_t i = 0; i < lat.dim; ++i)
        for (std::size_t j = 0; j < lat.dim; ++j)
          q += Rational(c[i]) * lat.gram.at(i, j) * Rational(c[j]);
      CHECK(q == mv.norm);
    }
  }
}

TEST_CASE("vectors_up_to_norm walks the D_3 shells") {
  Lattice d3 = root_d(3);
  // Norm 1: the 12 minimal vectors (6 pairs). Norm 2: the 6 axis vectors
  // (3 pairs). Nothing else lies at or below norm 2.
  CHECK(vectors_up_to_norm(d3, Rational(3, 2)).size() == 6);
  auto shells = vectors_up_to_norm(d3, Rational(2));
  CHECK(shells.size() == 9);
  CHECK(vectors_up_to_norm(d3, Rational(1, 2)).empty());
  for (const auto& c : shells) {
    Rational q(0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        q += Rational(c[i]) * d3.gram.at(i, j) * Rational(c[j]);
    CHECK(q > Rational(0));
    CHECK(q <= Rational(2));
  }
}

TEST_CASE("Z^2 minimal vectors") {
  RatMatrix id = RatMatrix::identity(2);
  Lattice z2 = lattice_from_gram("Z2", id);
  MinimalVectors mv = minimal_vectors(z2);
  CHECK(mv.norm == Rational(1));
  CHECK(mv.count == 4);
}

TEST_CASE("Leech invariants") {
  Lattice l = leech();
  CHECK(l.dim == 24);
  // d^2 = 2^{-48}.
  BigInt denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, 48);
  CHECK(det_exact(l.gram) == Rational(BigInt(1), denom));
  MinimalVectors mv = minimal_vectors(l);
  CHECK(mv.norm == Rational(1));
  CHECK(mv.count == 196560);
  // The two-coordinate shell: 1104 vectors = 552 pairs of shape
  // 2^{-3/2} (+-2, +-2, 0, ..., 0), each of exact norm (4+4)/8 = 1.
  auto idx = leech_two_coordinate_pairs(l, mv);
  CHECK(idx.size() == 552);
}

TEST_CASE("unit configuration geometry") {
  Lattice d3 = root_d(3);
  auto cfg = unit_configuration(d3, minimal_vectors(d3));
  CHECK(cfg.pair_count() == 6);
  for (std::size_t p = 0; p < 6; ++p) {
    CHECK(std::fabs(norm2(cfg.unit(p)) - 1.0) <= 1e-12);
    for (std::size_t q = 0; q < 6; ++q) {
      Rational ip = abs(cfg.unit_inner(p, q));
      if (p == q) CHECK(ip == Rational(1));
      else CHECK((ip == Rational(0) || ip == Rational(1, 2)));
    }
  }
  Lattice a2 = root_a(2);
  auto cfg2 = unit_configuration(a2, minimal_vectors(a2));
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = p + 1; q < 3; ++q)
      CHECK(abs(cfg2.unit_inner(p, q)) == Rational(1, 2));
}

TEST_CASE("lattice files parse with comments") {
  const char* path = "test_lattice_input.txt";
  {
    std::ofstream out(path);
    out << "# hexagonal Gram\n2\n1 -1/2\n# row two\n-1/2 1\n";
  }
  Lattice lat = lattice_from_file(path);
  CHECK(lat.dim == 2);
  CHECK(lat.gram.at(0, 1) == Rational(-1, 2));
  CHECK(minimal_vectors(lat).count == 6);
  std::remove(path);
  CHECK_THROWS(lattice_from_file("does_not_exist.txt"));
}

TEST_CASE("lattice_by_name resolves the named families") {
  CHECK(lattice_by_name("a2").name == "A2");
  CHECK(lattice_by_name("E8").dim == 8);
  CHECK(lattice_by_name("Leech").dim == 24);
}

TEST_CASE("positive definiteness is enforced exactly") {
  RatMatrix bad(2, 2);
  bad.at(0, 0) = 1; bad.at(0, 1) = 2;
  bad.at(1, 0) = 2; bad.at(1, 1) = 1;
  CHECK_THROWS_AS(lattice_from_gram("bad", bad), std::invalid_argument);
}
