// Fincke-Pohst / Schnorr-Euchner enumeration of shortest lattice vectors.
//
// Float partial sums on the Cholesky factor of the LLL-reduced Gram drive the
// pruning; every accept/reject of a complete candidate is exact integer
// arithmetic on the scaled Gram. The tree is cut to one representative per
// +- pair: at any level where all outer coefficients vanish, only nonnegative
// values are visited.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "latpack/lattice.hpp"
#include "latpack/parallel.hpp"

namespace latpack {

namespace {

struct ScaledGram {
  std::size_t n = 0;
  BigInt lambda;                // common denominator of the Gram
  std::vector<long long> e;     // lambda * gram, row major
  long long at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
};

long long to_ll(const BigInt& x) {
  if (!x.fits_slong_p())
    throw std::domain_error("enumeration: Gram entries too large for exact arithmetic");
  return x.get_si();
}

ScaledGram scale_gram(const RatMatrix& g) {
  ScaledGram s;
  s.n = g.rows();
  s.lambda = 1;
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j)
      mpz_lcm(s.lambda.get_mpz_t(), s.lambda.get_mpz_t(), g.at(i, j).den().get_mpz_t());
  s.e.resize(s.n * s.n);
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j) {
      BigInt v = g.at(i, j).num() * (s.lambda / g.at(i, j).den());
      s.e[i * s.n + j] = to_ll(v);
    }
  return s;
}

// lambda * |c|^2, exact.
long long exact_norm(const ScaledGram& g, const std::vector<long long>& x) {
  __int128 q = 0;
  for (std::size_t i = 0; i < g.n; ++i) {
    if (x[i] == 0) continue;
    __int128 row = 0;
    for (std::size_t j = 0; j < g.n; ++j) row += static_cast<__int128>(g.at(i, j)) * x[j];
    q += row * x[i];
  }
  if (q > INT64_MAX || q < INT64_MIN)
    throw std::domain_error("enumeration: exact norm overflow");
  return static_cast<long long>(q);
}

using LeafFn = std::function<void(const std::vector<long long>&)>;

// Iterative zigzag walk of levels top..0 with x[j] preset above `top`.
// `bound` may shrink between leaves (pass 1). Returns nodes visited.
std::uint64_t walk(const MatD& r, int top, double pd_start, bool zp_start,
                   std::vector<long long>& x, const double* bound, const LeafFn& leaf) {
  const int n = static_cast<int>(r.rows);
  std::vector<double> s(n, 0.0), pd(n, 0.0);
  std::vector<long long> up(n, 0), dn(n, 0);
  std::vector<bool> up_dead(n, false), dn_dead(n, false), zp(n, false);
  std::uint64_t nodes = 0;

  auto enter = [&](int k, double pd_above, bool zero_prefix) {
    double acc = 0.0;
    for (int j = k + 1; j < n; ++j) acc += r.at(k, j) * static_cast<double>(x[j]);
    s[k] = acc;
    pd[k] = pd_above;
    zp[k] = zero_prefix;
    if (zero_prefix) {
      up[k] = 0;
      up_dead[k] = false;
      dn_dead[k] = true;
    } else {
      long long mid = std::llround(-acc / r.at(k, k));
      up[k] = mid;
      dn[k] = mid - 1;
      up_dead[k] = false;
      dn_dead[k] = false;
    }
  };

  enter(top, pd_start, zp_start);
  int k = top;
  for (;;) {
    if (up_dead[k] && dn_dead[k]) {
      if (k == top) return nodes;
      ++k;
      continue;
    }
    bool take_up;
    double rv_up = 0.0, rv_dn = 0.0;
    if (!up_dead[k]) {
      double d = r.at(k, k) * static_cast<double>(up[k]) + s[k];
      rv_up = d * d;
    }
    if (!dn_dead[k]) {
      double d = r.at(k, k) * static_cast<double>(dn[k]) + s[k];
      rv_dn = d * d;
    }
    if (up_dead[k]) take_up = false;
    else if (dn_dead[k]) take_up = true;
    else take_up = rv_up <= rv_dn;

    ++nodes;
    double t = take_up ? rv_up : rv_dn;
    if (pd[k] + t > *bound) {
      (take_up ? up_dead : dn_dead)[k] = true;
      continue;
    }
    long long v = take_up ? up[k]++ : dn[k]--;
    x[k] = v;
    if (k == 0) {
      if (!(zp[0] && v == 0)) leaf(x);
      continue;
    }
    enter(k - 1, pd[k] + t, zp[k] && v == 0);
    --k;
  }
}

struct ReducedLattice {
  ScaledGram gz;                                 // scaled reduced Gram U G U^T
  MatD r;                                        // float Cholesky of reduced Gram
  std::vector<std::vector<long long>> u;         // unimodular transform
};

ReducedLattice reduce_for_enum(const Lattice& lat) {
  const std::size_t n = lat.dim;
  ScaledGram gz0 = scale_gram(lat.gram);
  MatD gf(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gf.at(i, j) = lat.gram.at(i, j).to_double();
  LllResult lll = lll_reduce(cholesky(gf), 0.99);

  // Exact reduced Gram: U (lambda G) U^T.
  ReducedLattice red;
  red.u = lll.transform;
  red.gz.n = n;
  red.gz.lambda = gz0.lambda;
  red.gz.e.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt acc = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (red.u[i][a] == 0) continue;
        BigInt inner = 0;
        for (std::size_t b = 0; b < n; ++b)
          inner += to_bigint(gz0.at(a, b)) * to_bigint(red.u[j][b]);
        acc += to_bigint(red.u[i][a]) * inner;
      }
      red.gz.e[i * n + j] = to_ll(acc);
    }
  double lam = red.gz.lambda.get_d();
  MatD gr(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gr.at(i, j) = static_cast<double>(red.gz.at(i, j)) / lam;
  // Partial sums need the upper-triangular factor: G = R^T R with R = L^T.
  red.r = transpose(cholesky(gr));
  return red;
}

// Map reduced coefficients back through U^T and canonicalize the sign.
std::vector<int> map_back(const ReducedLattice& red, const std::vector<long long>& c) {
  const std::size_t n = red.gz.n;
  std::vector<long long> out(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    __int128 acc = 0;
    for (std::size_t i = 0; i < n; ++i)
      acc += static_cast<__int128>(red.u[i][j]) * c[i];
    if (acc > INT64_MAX || acc < INT64_MIN)
      throw std::domain_error("enumeration: coefficient overflow");
    out[j] = static_cast<long long>(acc);
  }
  int sign = 0;
  for (std::size_t j = 0; j < n && sign == 0; ++j)
    if (out[j] != 0) sign = out[j] > 0 ? 1 : -1;
  std::vector<int> res(n);
  for (std::size_t j = 0; j < n; ++j) {
    long long v = sign < 0 ? -out[j] : out[j];
    if (v > INT32_MAX || v < INT32_MIN)
      throw std::domain_error("enumeration: coefficient overflow");
    res[j] = static_cast<int>(v);
  }
  return res;
}

// Enumerate every canonical vector with exact scaled norm in (0, qmax],
// handing leaves to `sink`; parallel over the outermost coefficient.
std::uint64_t enumerate_to(const ReducedLattice& red, long long qmax,
                           const std::function<void(std::vector<int>, long long)>& sink) {
  const std::size_t n = red.gz.n;
  const double lam = red.gz.lambda.get_d();
  const double fbound = (static_cast<double>(qmax) / lam) * (1.0 + 1e-9) + 1e-12;
  if (n == 1) {
    long long vmax = static_cast<long long>(std::sqrt(static_cast<double>(qmax) /
                                                      static_cast<double>(red.gz.at(0, 0))));
    std::uint64_t nodes = 0;
    for (long long v = 1; v <= vmax; ++v) {
      ++nodes;
      long long q = red.gz.at(0, 0) * v * v;
      if (q <= qmax) sink(map_back(red, {v}), q);
    }
    return nodes;
  }

  double r_top = red.r.at(n - 1, n - 1);
  auto vmax = static_cast<long long>(std::floor(std::sqrt(fbound) / r_top + 1e-9));
  std::vector<std::vector<std::pair<std::vector<int>, long long>>> found(vmax + 1);
  std::vector<std::uint64_t> node_counts(vmax + 1, 0);

  parallel_for(static_cast<std::size_t>(vmax + 1), [&](std::size_t vi) {
    auto v = static_cast<long long>(vi);
    std::vector<long long> x(n, 0);
    x[n - 1] = v;
    double pd0 = r_top * static_cast<double>(v);
    pd0 *= pd0;
    if (pd0 > fbound) return;
    double bound = fbound;
    auto& bucket = found[vi];
    node_counts[vi] = walk(
        red.r, static_cast<int>(n) - 2, pd0, v == 0, x, &bound,
        [&](const std::vector<long long>& c) {
          long long q = exact_norm(red.gz, c);
          if (q > 0 && q <= qmax) bucket.emplace_back(map_back(red, c), q);
        });
  });

  std::uint64_t nodes = 0;
  for (long long v = 0; v <= vmax; ++v) {
    nodes += node_counts[v];
    for (auto& [vec, q] : found[v]) sink(std::move(vec), q);
  }
  return nodes;
}

}  // namespace

MinimalVectors minimal_vectors(const Lattice& lat) {
  ReducedLattice red = reduce_for_enum(lat);
  const std::size_t n = lat.dim;

  // Pass 1: establish the exact minimum under a shrinking float bound,
  // starting from the best reduced basis vector.
  long long best_q = red.gz.at(0, 0);
  for (std::size_t i = 1; i < n; ++i) best_q = std::min(best_q, red.gz.at(i, i));
  const double lam = red.gz.lambda.get_d();
  double bound = (static_cast<double>(best_q) / lam) * (1.0 + 1e-9);
  const double pass1_bound = bound;
  std::uint64_t nodes = 0;
  if (n >= 2) {
    std::vector<long long> x(n, 0);
    nodes += walk(red.r, static_cast<int>(n) - 1, 0.0, true, x, &bound,
                  [&](const std::vector<long long>& c) {
                    long long q = exact_norm(red.gz, c);
                    if (q > 0 && q < best_q) {
                      best_q = q;
                      bound = (static_cast<double>(q) / lam) * (1.0 + 1e-9);
                    }
                  });
  }

  // Pass 2: fixed bound at the exact minimum, collect everything.
  MinimalVectors mv;
  mv.norm = Rational(to_bigint(best_q), red.gz.lambda);
  mv.pass1_bound = pass1_bound;
  nodes += enumerate_to(red, best_q, [&](std::vector<int> vec, long long q) {
    if (q == best_q) mv.coords.push_back(std::move(vec));
  });
  std::sort(mv.coords.begin(), mv.coords.end());
  mv.count = 2 * mv.coords.size();
  mv.nodes = nodes;
  return mv;
}

std::vector<std::vector<int>> vectors_up_to_norm(const Lattice& lat, const Rational& norm_bound) {
  ReducedLattice red = reduce_for_enum(lat);
  // Largest scaled norm within the rational bound: floor(bound * lambda).
  Rational scaled = norm_bound * Rational(red.gz.lambda);
  BigInt qmax_z = scaled.num() / scaled.den();
  if (qmax_z <= 0) return {};
  long long qmax = to_ll(qmax_z);
  std::vector<std::vector<int>> out;
  enumerate_to(red, qmax, [&](std::vector<int> vec, long long) {
    out.push_back(std::move(vec));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace latpack
