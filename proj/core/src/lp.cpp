#include "latpack/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace latpack {

namespace {

struct Tableau {
  std::size_t nrows = 0, ncols = 0;
  std::vector<std::vector<Rational>> t;  // nrows x ncols
  std::vector<Rational> rhs;             // nrows, kept >= 0
  std::vector<Rational> z;               // reduced costs, ncols
  Rational zval;                         // current objective value
  std::vector<std::size_t> basis;        // basic column per row
  std::vector<Rational> cost;            // objective coefficients

  void set_objective(const std::vector<Rational>& c) {
    cost = c;
    z = c;
    zval = 0;
    for (std::size_t i = 0; i < nrows; ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb.is_zero()) continue;
      zval += cb * rhs[i];
      for (std::size_t j = 0; j < ncols; ++j) z[j] -= cb * t[i][j];
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    Rational inv = Rational(1) / t[pr][pc];
    for (auto& x : t[pr]) x *= inv;
    rhs[pr] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == pr || t[i][pc].is_zero()) continue;
      Rational f = t[i][pc];
      for (std::size_t j = 0; j < ncols; ++j) t[i][j] -= f * t[pr][j];
      rhs[i] -= f * rhs[pr];
    }
    if (!z[pc].is_zero()) {
      Rational f = z[pc];
      for (std::size_t j = 0; j < ncols; ++j) z[j] -= f * t[pr][j];
      zval += f * rhs[pr];
    }
    basis[pr] = pc;
  }

  // Minimizes the current objective with Bland's rule. Returns false when the
  // problem is unbounded below, in which case `ray_col` holds the entering
  // column with no blocking row.
  bool minimize(const std::vector<bool>& allowed, std::size_t& ray_col) {
    const std::size_t guard_max = 5000000;
    for (std::size_t iter = 0; iter < guard_max; ++iter) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (allowed[j] && z[j].sign() < 0) { enter = j; break; }
      }
      if (enter == ncols) return true;  // optimal
      std::size_t leave = nrows;
      Rational best_ratio;
      for (std::size_t i = 0; i < nrows; ++i) {
        if (t[i][enter].sign() <= 0) continue;
        Rational ratio = rhs[i] / t[i][enter];
        if (leave == nrows || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == nrows) { ray_col = enter; return false; }
      pivot(leave, enter);
    }
    throw std::runtime_error("lp_solve: pivot limit exceeded");
  }
};

}  // namespace

LpResult lp_solve(const RatMatrix& a, const std::vector<Rational>& b, bool strict) {
  if (b.size() != a.rows()) throw std::invalid_argument("lp_solve: dimension mismatch");
  const std::size_t m = a.rows(), k = a.cols();
  LpResult res;

  // Row-reduce [A | b | I] exactly: detects inconsistency, drops redundant
  // rows, and keeps the multipliers needed to lift certificates back.
  RatMatrix aug(m, k + 1 + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, k) = b[i];
    aug.at(i, k + 1 + i) = 1;
  }
  // Manual elimination restricted to the [A | b] part.
  std::vector<std::size_t> kept;  // rows with a pivot in A
  {
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < m; ++c) {
      std::size_t p = r;
      while (p < m && aug.at(p, c).is_zero()) ++p;
      if (p == m) continue;
      if (p != r)
        for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug.at(p, j), aug.at(r, j));
      Rational inv = Rational(1) / aug.at(r, c);
      for (std::size_t j = 0; j < aug.cols(); ++j) aug.at(r, j) *= inv;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == r || aug.at(i, c).is_zero()) continue;
        Rational f = aug.at(i, c);
        for (std::size_t j = 0; j < aug.cols(); ++j) aug.at(i, j) -= f * aug.at(r, j);
      }
      kept.push_back(r);
      ++r;
    }
    // Any remaining row must be all-zero in A; nonzero rhs proves infeasibility.
    for (std::size_t i = r; i < m; ++i) {
      if (aug.at(i, k).is_zero()) continue;
      int s = aug.at(i, k).sign();
      res.status = LpStatus::infeasible;
      res.certificate.assign(m, Rational(0));
      for (std::size_t j = 0; j < m; ++j)
        res.certificate[j] = (s > 0 ? -aug.at(i, k + 1 + j) : aug.at(i, k + 1 + j));
      return res;
    }
  }

  const std::size_t r = kept.size();
  // Structural columns: k originals, plus t+ / t- in strict mode.
  const std::size_t nstruct = strict ? k + 2 : k;
  Tableau tab;
  tab.nrows = r;
  tab.ncols = nstruct + r;
  tab.t.assign(r, std::vector<Rational>(tab.ncols, Rational(0)));
  tab.rhs.assign(r, Rational(0));
  tab.basis.assign(r, 0);
  std::vector<std::vector<Rational>> mult(r, std::vector<Rational>(m));  // row multipliers

  for (std::size_t i = 0; i < r; ++i) {
    int flip = aug.at(i, k).sign() < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j)
      tab.t[i][j] = flip < 0 ? -aug.at(i, j) : aug.at(i, j);
    if (strict) {
      Rational sum = 0;
      for (std::size_t j = 0; j < k; ++j) sum += tab.t[i][j];
      tab.t[i][k] = sum;        // t+
      tab.t[i][k + 1] = -sum;   // t-
    }
    tab.t[i][nstruct + i] = 1;  // artificial
    tab.rhs[i] = flip < 0 ? -aug.at(i, k) : aug.at(i, k);
    for (std::size_t j = 0; j < m; ++j)
      mult[i][j] = flip < 0 ? -aug.at(i, k + 1 + j) : aug.at(i, k + 1 + j);
    tab.basis[i] = nstruct + i;
  }

  auto lift_certificate = [&](const std::vector<Rational>& y_red) {
    std::vector<Rational> y(m, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < m; ++j) y[j] += y_red[i] * mult[i][j];
    return y;
  };

  // Phase I: minimize the sum of artificials.
  {
    std::vector<Rational> c(tab.ncols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) c[nstruct + i] = 1;
    tab.set_objective(c);
    std::vector<bool> allowed(tab.ncols, true);
    std::size_t ray = 0;
    bool ok = tab.minimize(allowed, ray);
    assert(ok);
    (void)ok;
    if (tab.zval.sign() > 0) {
      // Infeasible; duals read off the artificial columns: y_i = 1 - z_art_i,
      // satisfying y^T A_red <= 0 and y^T b_red > 0.
      std::vector<Rational> y(r);
      for (std::size_t i = 0; i < r; ++i) y[i] = Rational(1) - tab.z[nstruct + i];
      auto yo = lift_certificate(y);
      for (auto& v : yo) v = -v;  // orient to y^T A >= 0, y^T b < 0
      res.status = LpStatus::infeasible;
      res.certificate = std::move(yo);
      return res;
    }
    // Drive any artificial still basic (at level zero) out of the basis.
    for (std::size_t i = 0; i < r; ++i) {
      if (tab.basis[i] < nstruct) continue;
      std::size_t pc = nstruct;
      for (std::size_t j = 0; j < nstruct; ++j)
        if (!tab.t[i][j].is_zero()) { pc = j; break; }
      assert(pc < nstruct);  // rows are independent after reduction
      tab.pivot(i, pc);
    }
  }

  auto read_solution = [&](std::size_t ncols_struct) {
    std::vector<Rational> x(ncols_struct, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
      if (tab.basis[i] < ncols_struct) x[tab.basis[i]] = tab.rhs[i];
    return x;
  };

  if (!strict) {
    res.status = LpStatus::feasible;
    res.solution = read_solution(k);
    return res;
  }

  // Phase II: maximize t = t+ - t-, i.e. minimize t- - t+. Artificials barred.
  std::vector<Rational> c(tab.ncols, Rational(0));
  c[k] = -1;
  c[k + 1] = 1;
  tab.set_objective(c);
  std::vector<bool> allowed(tab.ncols, true);
  for (std::size_t i = 0; i < r; ++i) allowed[nstruct + i] = false;
  std::size_t ray_col = 0;
  bool bounded = tab.minimize(allowed, ray_col);

  if (!bounded) {
    // Margin grows without bound along the ray; emit a concrete solution with
    // every component >= 1.
    std::vector<Rational> x(tab.ncols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[tab.basis[i]] = tab.rhs[i];
    std::vector<Rational> d(tab.ncols, Rational(0));
    d[ray_col] = 1;
    for (std::size_t i = 0; i < r; ++i) d[tab.basis[i]] = -tab.t[i][ray_col];
    Rational t0 = x[k] - x[k + 1];
    Rational dt = d[k] - d[k + 1];
    assert(dt.sign() > 0);
    Rational theta = t0 >= Rational(1) ? Rational(0) : (Rational(1) - t0) / dt;
    res.status = LpStatus::feasible;
    res.margin_unbounded = true;
    res.solution.assign(k, Rational(0));
    Rational t = t0 + theta * dt;
    for (std::size_t j = 0; j < k; ++j) res.solution[j] = x[j] + theta * d[j] + t;
    res.margin = t;
    return res;
  }

  Rational tstar = -tab.zval;  // zval is min(t- - t+) = -max t
  res.margin = tstar;
  if (tstar.sign() > 0) {
    res.status = LpStatus::feasible;
    auto s = read_solution(nstruct);
    res.solution.assign(k, Rational(0));
    Rational t = s[k] - s[k + 1];
    for (std::size_t j = 0; j < k; ++j) res.solution[j] = s[j] + t;
    return res;
  }

  // Optimal margin <= 0: no strictly positive solution. The phase-II duals
  // give the separating certificate: y^T A >= 0, sum_j y^T A_j >= 1, y^T b = t*.
  std::vector<Rational> y(r);
  for (std::size_t i = 0; i < r; ++i) y[i] = -tab.z[nstruct + i];
  auto yo = lift_certificate(y);
  for (auto& v : yo) v = -v;
  res.status = LpStatus::infeasible;
  res.certificate = std::move(yo);
  return res;
}

}  // namespace latpack
