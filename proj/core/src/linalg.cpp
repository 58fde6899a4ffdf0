#include "latpack/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latpack {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

MatD MatD::identity(std::size_t n) {
  MatD m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

namespace {

// Scale a rational row to coprime integers (positive scaling keeps rank).
IntRow integerize_row(const RatMatrix& m, std::size_t i) {
  BigInt lcm = 1;
  for (std::size_t j = 0; j < m.cols(); ++j)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).den().get_mpz_t());
  IntRow row(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    row[j] = m.at(i, j).num() * (lcm / m.at(i, j).den());
  return row;
}

void strip_content(IntRow& row) {
  BigInt g = 0;
  for (const auto& x : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : row) x /= g;
}

std::size_t first_nonzero(const IntRow& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return j;
  return row.size();
}

}  // namespace

std::size_t rank_exact(const IntRows& rows, std::size_t cols) {
  // Echelon rows keyed by pivot column; new rows are cross-multiplied against
  // the pivots in column order, content-stripped, then inserted.
  std::vector<std::pair<std::size_t, IntRow>> ech;
  for (const auto& input : rows) {
    IntRow r = input;
    strip_content(r);
    for (const auto& [pc, prow] : ech) {
      if (r[pc] == 0) continue;
      BigInt a = prow[pc], b = r[pc];
      for (std::size_t j = 0; j < cols; ++j) r[j] = r[j] * a - prow[j] * b;
      strip_content(r);
    }
    std::size_t pc = first_nonzero(r);
    if (pc == cols) continue;
    ech.emplace_back(pc, std::move(r));
    std::sort(ech.begin(), ech.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    if (ech.size() == cols) break;
  }
  return ech.size();
}

std::size_t rank_exact(const RatMatrix& m) {
  IntRows rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = integerize_row(m, i);
  return rank_exact(rows, m.cols());
}

std::size_t rank_modp(const IntRows& rows, std::size_t cols, std::uint64_t p) {
  if (p < 2 || mpz_probab_prime_p(BigInt(static_cast<unsigned long>(p)).get_mpz_t(), 25) == 0)
    throw std::invalid_argument("rank_modp: modulus is not prime");
  if (p >= (1ull << 31)) throw std::invalid_argument("rank_modp: prime too large");

  auto modp = [p](const BigInt& x) -> std::uint64_t {
    BigInt r = x % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
  };
  auto inv = [p](std::uint64_t a) {
    // Fermat inverse.
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };

  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> ech;
  for (const auto& input : rows) {
    std::vector<std::uint64_t> r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = modp(input[j]);
    for (const auto& [pc, prow] : ech) {
      if (r[pc] == 0) continue;
      std::uint64_t f = p - r[pc];  // row += f * prow makes r[pc] zero
      for (std::size_t j = pc; j < cols; ++j) r[j] = (r[j] + f * prow[j]) % p;
    }
    std::size_t pc = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (r[j] != 0) { pc = j; break; }
    if (pc == cols) continue;
    std::uint64_t s = inv(r[pc]);
    for (std::size_t j = pc; j < cols; ++j) r[j] = r[j] * s % p;
    ech.emplace_back(pc, std::move(r));
    std::sort(ech.begin(), ech.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    if (ech.size() == cols) break;
  }
  return ech.size();
}

BigInt det_exact_int(IntRows m) {
  const std::size_t n = m.size();
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Rational det_exact(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det_exact: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt lcm = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).den().get_mpz_t());
  IntRows z(n, IntRow(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      z[i][j] = m.at(i, j).num() * (lcm / m.at(i, j).den());
  BigInt dz = det_exact_int(std::move(z));
  BigInt denom;
  mpz_pow_ui(denom.get_mpz_t(), lcm.get_mpz_t(), n);
  return Rational(dz, denom);
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    Rational inv = Rational(1) / a.at(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Rational f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> rat_solve(const RatMatrix& a,
                                               const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rat_solve: dimension mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == a.cols()) return std::nullopt;  // 0 = 1 row
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    // Free variables stay zero; pivot variable takes the rhs value.
    x[pivots[k]] = aug.at(k, a.cols());
  }
  return x;
}

std::optional<std::vector<Rational>> rat_nullspace_one(const RatMatrix& a) {
  RatMatrix m = a;
  auto pivots = rref(m);
  if (pivots.size() == a.cols()) return std::nullopt;
  // First non-pivot column provides a kernel vector.
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> x(a.cols(), Rational(0));
  x[free_col] = 1;
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[pivots[k]] = -m.at(k, free_col);
  return x;
}

bool leading_minors_positive(const RatMatrix& g) {
  if (!g.is_square()) return false;
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    RatMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = g.at(i, j);
    if (det_exact(sub).sign() <= 0) return false;
  }
  return true;
}

IntRows hnf_basis(IntRows rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    // Clear column c below row r by repeated Euclidean steps.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() ||
            mpz_cmpabs(rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0)
          best = i;
      }
      if (best == rows.size()) break;  // column clear below r
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        BigInt q = rows[i][c] / rows[r][c];  // truncated division
        if (q != 0)
          for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) {
        if (rows[r][c] < 0)
          for (std::size_t j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
        // Reduce entries above the pivot.
        for (std::size_t i = 0; i < r; ++i) {
          BigInt q;
          mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
          if (q != 0)
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

// ---- float ----

double det_float(const MatD& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det_float: matrix not square");
  MatD a = m;
  const std::size_t n = a.rows;
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(a.at(i, k)) > std::fabs(a.at(p, k))) p = i;
    if (a.at(p, k) == 0.0) return 0.0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(k, j));
      det = -det;
    }
    det *= a.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = a.at(i, k) / a.at(k, k);
      for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return det;
}

void jacobi_eigen(const MatD& s, VecD& evals, MatD& evecs) {
  if (s.rows != s.cols) throw std::invalid_argument("jacobi_eigen: matrix not square");
  const std::size_t n = s.rows;
  MatD a = s;
  evecs = MatD::identity(n);
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a.at(i, j) * a.at(i, j);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a.at(p, q);
        if (std::fabs(apq) < 1e-300) continue;
        double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = c * akp - sn * akq;
          a.at(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = c * apk - sn * aqk;
          a.at(q, k) = sn * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double vkp = evecs.at(k, p), vkq = evecs.at(k, q);
          evecs.at(k, p) = c * vkp - sn * vkq;
          evecs.at(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }
  evals.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) evals[i] = a.at(i, i);
}

MatD psd_sqrt(const MatD& s) {
  VecD evals;
  MatD v;
  jacobi_eigen(s, evals, v);
  const std::size_t n = s.rows;
  for (double l : evals)
    if (l <= 0.0) throw std::domain_error("psd_sqrt: non-positive eigenvalue");
  MatD t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        sum += v.at(i, k) * std::sqrt(evals[k]) * v.at(j, k);
      t.at(i, j) = sum;
      t.at(j, i) = sum;
    }
  return t;
}

MatD cholesky(const MatD& g) {
  if (g.rows != g.cols) throw std::invalid_argument("cholesky: matrix not square");
  const std::size_t n = g.rows;
  MatD l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = g.at(i, j);
      for (std::size_t k = 0; k < j; ++k) sum -= l.at(i, k) * l.at(j, k);
      if (i == j) {
        if (sum <= 0.0) throw std::domain_error("cholesky: matrix not positive definite");
        l.at(i, i) = std::sqrt(sum);
      } else {
        l.at(i, j) = sum / l.at(j, j);
      }
    }
  }
  return l;
}

LllResult lll_reduce(const MatD& basis, double delta) {
  if (delta <= 0.25 || delta >= 1.0)
    throw std::invalid_argument("lll_reduce: delta must be in (0.25, 1)");
  if (basis.rows != basis.cols)
    throw std::invalid_argument("lll_reduce: basis must be square");
  const std::size_t n = basis.rows;
  MatD b = basis;
  std::vector<std::vector<long long>> u(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

  MatD bstar(n, n);
  MatD mu(n, n);
  VecD bnorm(n);
  auto gso = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) bstar.at(i, k) = b.at(i, k);
      for (std::size_t j = 0; j < i; ++j) {
        double num = 0.0;
        for (std::size_t k = 0; k < n; ++k) num += b.at(i, k) * bstar.at(j, k);
        mu.at(i, j) = num / bnorm[j];
        for (std::size_t k = 0; k < n; ++k) bstar.at(i, k) -= mu.at(i, j) * bstar.at(j, k);
      }
      bnorm[i] = 0.0;
      for (std::size_t k = 0; k < n; ++k) bnorm[i] += bstar.at(i, k) * bstar.at(i, k);
      if (bnorm[i] < 1e-280)
        throw std::domain_error("lll_reduce: basis is singular");
    }
  };
  gso();

  std::size_t k = 1;
  std::size_t guard = 0;
  const std::size_t guard_max = 100000 * n * n;
  while (k < n) {
    if (++guard > guard_max) throw std::runtime_error("lll_reduce: no convergence");
    for (std::size_t j = k; j-- > 0;) {
      double m = mu.at(k, j);
      if (std::fabs(m) > 0.5) {
        long long q = std::llround(m);
        for (std::size_t c = 0; c < n; ++c) b.at(k, c) -= double(q) * b.at(j, c);
        for (std::size_t c = 0; c < n; ++c) u[k][c] -= q * u[j][c];
        gso();
      }
    }
    if (bnorm[k] >= (delta - mu.at(k, k - 1) * mu.at(k, k - 1)) * bnorm[k - 1]) {
      ++k;
    } else {
      for (std::size_t c = 0; c < n; ++c) std::swap(b.at(k, c), b.at(k - 1, c));
      std::swap(u[k], u[k - 1]);
      gso();
      k = k > 1 ? k - 1 : 1;
    }
  }
  return {std::move(b), std::move(u)};
}

MatD mat_mul(const MatD& a, const MatD& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
  MatD c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

MatD transpose(const MatD& a) {
  MatD t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

VecD mat_vec(const MatD& a, const VecD& x) {
  if (x.size() != a.cols) throw std::invalid_argument("mat_vec: dimension mismatch");
  VecD y(a.rows, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) y[i] += a.at(i, j) * x[j];
  return y;
}

double frob_norm(const MatD& a) {
  double s = 0.0;
  for (double x : a.e) s += x * x;
  return std::sqrt(s);
}

double frob_dist_identity(const MatD& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) {
      double d = a.at(i, j) - (i == j ? 1.0 : 0.0);
      s += d * d;
    }
  return std::sqrt(s);
}

VecD solve_linear(MatD a, VecD b) {
  if (a.rows != a.cols || b.size() != a.rows)
    throw std::invalid_argument("solve_linear: dimension mismatch");
  const std::size_t n = a.rows;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(a.at(i, k)) > std::fabs(a.at(p, k))) p = i;
    if (std::fabs(a.at(p, k)) < 1e-300)
      throw std::domain_error("solve_linear: singular system");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(k, j));
      std::swap(b[p], b[k]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = a.at(i, k) / a.at(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      b[i] -= f * b[k];
    }
  }
  VecD x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a.at(i, j) * x[j];
    x[i] = s / a.at(i, i);
  }
  return x;
}

MatD invert(const MatD& a) {
  if (a.rows != a.cols) throw std::invalid_argument("invert: matrix not square");
  const std::size_t n = a.rows;
  MatD inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    VecD e(n, 0.0);
    e[c] = 1.0;
    VecD col = solve_linear(a, e);
    for (std::size_t i = 0; i < n; ++i) inv.at(i, c) = col[i];
  }
  return inv;
}

double dot(const VecD& a, const VecD& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const VecD& a) { return std::sqrt(dot(a, a)); }

}  // namespace latpack
