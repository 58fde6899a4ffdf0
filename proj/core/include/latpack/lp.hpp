// Exact rational linear programming for equality-plus-nonnegativity systems.
#pragma once

#include <vector>

#include "latpack/linalg.hpp"
#include "latpack/rational.hpp"

namespace latpack {

enum class LpStatus { feasible, infeasible };

struct LpResult {
  LpStatus status = LpStatus::infeasible;

  // Feasible: exact solution of A v = b (v >= 0; strict variant all v > 0).
  std::vector<Rational> solution;

  // Infeasible: exact Farkas dual over the original rows.
  //  - strict=false: y^T A >= 0 componentwise and y^T b < 0.
  //  - strict=true:  y^T A >= 0 componentwise, sum_j y^T A_j > 0, y^T b <= 0
  //    (the margin analogue; y^T b equals the optimal margin).
  std::vector<Rational> certificate;

  // strict variant: the optimal margin t (max over solutions of min_i v_i),
  // unless unbounded.
  Rational margin;
  bool margin_unbounded = false;
};

// Decides {v >= 0 : A v = b} exactly (strict=false), or the existence of a
// solution with every component strictly positive (strict=true) by maximizing
// the margin t subject to v_i >= t. Simplex with Bland's rule throughout;
// redundant rows are eliminated internally.
LpResult lp_solve(const RatMatrix& a, const std::vector<Rational>& b, bool strict);

}  // namespace latpack
