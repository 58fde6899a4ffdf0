// Dense exact-rational, big-integer and small float linear algebra kernels.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latpack/rational.hpp"

namespace latpack {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool is_symmetric() const;
  bool is_square() const { return rows_ == cols_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

using IntRow = std::vector<BigInt>;
using IntRows = std::vector<IntRow>;

struct MatD {
  std::size_t rows = 0, cols = 0;
  std::vector<double> e;

  MatD() = default;
  MatD(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c, 0.0) {}
  static MatD identity(std::size_t n);

  double& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
};

using VecD = std::vector<double>;

// ---- exact operations ----

// Rank over Q. Fraction-free integer elimination (rows scaled to integers,
// gcd content stripped per row); stops early once full column rank is reached.
std::size_t rank_exact(const RatMatrix& m);
std::size_t rank_exact(const IntRows& rows, std::size_t cols);

// Rank over GF(p). Always a lower bound on the rational rank.
std::size_t rank_modp(const IntRows& rows, std::size_t cols, std::uint64_t p);

// Exact determinant, Bareiss fraction-free elimination.
Rational det_exact(const RatMatrix& m);
BigInt det_exact_int(IntRows m);

// One exact solution of A x = b, or nullopt if inconsistent.
std::optional<std::vector<Rational>> rat_solve(const RatMatrix& a,
                                               const std::vector<Rational>& b);

// One nonzero rational kernel vector of A, or nullopt if A has full column rank.
std::optional<std::vector<Rational>> rat_nullspace_one(const RatMatrix& a);

// All leading principal minors positive (exact positive-definiteness test).
bool leading_minors_positive(const RatMatrix& g);

// Hermite normal form of the row lattice. Returns the full-rank basis rows,
// upper triangular with positive diagonal, entries above reduced.
IntRows hnf_basis(IntRows rows, std::size_t cols);

// ---- float operations ----

double det_float(const MatD& m);

// Eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.
// evecs columns are the eigenvectors.
void jacobi_eigen(const MatD& s, VecD& evals, MatD& evecs);

// Unique symmetric positive-definite square root. Throws std::domain_error
// on a non-positive eigenvalue.
MatD psd_sqrt(const MatD& s);

// Lower-triangular L with L L^T = g (g symmetric positive definite).
MatD cholesky(const MatD& g);

struct LllResult {
  MatD basis;                                    // reduced rows
  std::vector<std::vector<long long>> transform; // unimodular U, basis = U * input
};

// Floating-point LLL reduction of the row basis, 0.25 < delta < 1.
LllResult lll_reduce(const MatD& basis, double delta);

MatD mat_mul(const MatD& a, const MatD& b);
MatD transpose(const MatD& a);
VecD mat_vec(const MatD& a, const VecD& x);
double frob_norm(const MatD& a);
double frob_dist_identity(const MatD& a);
VecD solve_linear(MatD a, VecD b);  // partial-pivot Gauss, throws if singular
MatD invert(const MatD& a);

double dot(const VecD& a, const VecD& b);
double norm2(const VecD& a);

}  // namespace latpack
