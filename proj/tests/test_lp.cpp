#include <doctest.h>

#include <random>

#include "latpack/lp.hpp"

using namespace latpack;

namespace {

RatMatrix make_matrix(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
  return m;
}

std::vector<Rational> rat_vec(const std::vector<long>& v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

bool substitutes_exactly(const RatMatrix& a, const std::vector<Rational>& b,
                         const std::vector<Rational>& v) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational acc(0);
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a.at(i, j) * v[j];
    if (acc != b[i]) return false;
  }
  return true;
}

bool certificate_valid(const RatMatrix& a, const std::vector<Rational>& b,
                       const std::vector<Rational>& y, bool strict) {
  Rational yb(0);
  for (std::size_t i = 0; i < a.rows(); ++i) yb += y[i] * b[i];
  Rational col_sum(0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Rational ya(0);
    for (std::size_t i = 0; i < a.rows(); ++i) ya += y[i] * a.at(i, j);
    if (ya.sign() < 0) return false;
    col_sum += ya;
  }
  // Strict margin certificates may have y^T b = 0 as long as the separating
  // functional is nonzero on the columns; structural infeasibility keeps the
  // plain y^T b < 0 form.
  if (strict) return yb.sign() <= 0 && (yb.sign() < 0 || col_sum.sign() > 0);
  return yb.sign() < 0;
}

}  // namespace

TEST_CASE("margin maximization on a balanced row") {
  auto a = make_matrix({{1, 1}});
  auto res = lp_solve(a, rat_vec({1}), true);
  CHECK(res.status == LpStatus::feasible);
  CHECK(res.margin == Rational(1, 2));
  REQUIRE(res.solution.size() == 2);
  CHECK(res.solution[0] == Rational(1, 2));
  CHECK(res.solution[1] == Rational(1, 2));
}

TEST_CASE("difference row: nonnegative solution exists, margin unbounded") {
  auto a = make_matrix({{1, -1}});
  auto b = rat_vec({1});
  auto relaxed = lp_solve(a, b, false);
  CHECK(relaxed.status == LpStatus::feasible);
  CHECK(substitutes_exactly(a, b, relaxed.solution));
  for (const auto& v : relaxed.solution) CHECK(v.sign() >= 0);

  // Strictly positive solutions exist too, e.g. (1+t, t): the margin grows
  // without bound, so the strict variant is feasible with an explicit
  // all-positive witness.
  auto strict = lp_solve(a, b, true);
  CHECK(strict.status == LpStatus::feasible);
  CHECK(strict.margin_unbounded);
  CHECK(substitutes_exactly(a, b, strict.solution));
  for (const auto& v : strict.solution) CHECK(v.sign() > 0);
}

TEST_CASE("forced zero component makes the strict variant infeasible") {
  // v1 + v2 = 1 and v1 = 1 force v2 = 0.
  auto a = make_matrix({{1, 1}, {1, 0}});
  auto b = rat_vec({1, 1});
  auto relaxed = lp_solve(a, b, false);
  CHECK(relaxed.status == LpStatus::feasible);
  CHECK(relaxed.solution[1] == Rational(0));
  auto strict = lp_solve(a, b, true);
  CHECK(strict.status == LpStatus::infeasible);
  CHECK(strict.margin == Rational(0));
  CHECK(certificate_valid(a, b, strict.certificate, true));
}

TEST_CASE("infeasible systems come with exact Farkas certificates") {
  // v1 + v2 = -1 has no nonnegative solution.
  auto a = make_matrix({{1, 1}});
  auto b = rat_vec({-1});
  auto res = lp_solve(a, b, false);
  CHECK(res.status == LpStatus::infeasible);
  CHECK(certificate_valid(a, b, res.certificate, false));

  // Inconsistent equalities.
  auto a2 = make_matrix({{1, 1}, {2, 2}});
  auto res2 = lp_solve(a2, rat_vec({1, 3}), false);
  CHECK(res2.status == LpStatus::infeasible);
  CHECK(certificate_valid(a2, rat_vec({1, 3}), res2.certificate, false));
}

TEST_CASE("redundant rows are eliminated internally") {
  auto a = make_matrix({{1, 1, 0}, {2, 2, 0}, {0, 1, 1}});
  auto b = rat_vec({1, 2, 1});
  auto res = lp_solve(a, b, false);
  CHECK(res.status == LpStatus::feasible);
  CHECK(substitutes_exactly(a, b, res.solution));
}

TEST_CASE("dimension mismatch is rejected") {
  auto a = make_matrix({{1, 1}});
  CHECK_THROWS_AS(lp_solve(a, rat_vec({1, 2}), false), std::invalid_argument);
}

TEST_CASE("random systems: solutions substitute exactly, certificates verify") {
  std::mt19937_64 rng(2024);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t m = 1 + rng() % 3, k = 1 + rng() % 5;
    RatMatrix a(m, k);
    std::vector<Rational> b(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < k; ++j)
        a.at(i, j) = Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
      b[i] = Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 2));
    }
    bool strict = rng() & 1;
    auto res = lp_solve(a, b, strict);
    if (res.status == LpStatus::feasible) {
      ++feasible;
      CHECK(substitutes_exactly(a, b, res.solution));
      for (const auto& v : res.solution) CHECK(v.sign() >= (strict ? 1 : 0));
    } else {
      ++infeasible;
      CHECK(certificate_valid(a, b, res.certificate, strict));
    }
  }
  CHECK(feasible > 10);
  CHECK(infeasible > 10);
}
